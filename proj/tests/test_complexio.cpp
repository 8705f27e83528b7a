#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gfc/complexio.hpp"

using namespace gfc;

TEST_CASE("parse_complex accepts the documented grammar") {
  CHECK(parse_complex("-6") == Complex(-6.0, 0.0));
  CHECK(parse_complex("-2+1.4142135623730951i") == Complex(-2.0, 1.4142135623730951));
  CHECK(parse_complex("1i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-2.5i") == Complex(0.0, -2.5));
  CHECK(parse_complex("3-4i") == Complex(3.0, -4.0));
  CHECK(parse_complex("2.5e-3+1.2e-4i") == Complex(2.5e-3, 1.2e-4));
  CHECK(parse_complex("0") == Complex(0.0, 0.0));
}

TEST_CASE("parse_complex rejects junk") {
  CHECK_THROWS_AS(parse_complex(""), ParseError);
  CHECK_THROWS_AS(parse_complex("inf"), ParseError);
  CHECK_THROWS_AS(parse_complex("i"), ParseError);
  CHECK_THROWS_AS(parse_complex("1 + 2i"), ParseError);
  CHECK_THROWS_AS(parse_complex("2+i"), ParseError);
  CHECK_THROWS_AS(parse_complex("abc"), ParseError);
  CHECK_THROWS_AS(parse_complex("nan"), ParseError);
}

TEST_CASE("parse_point handles inf") {
  CHECK(parse_point("inf").is_infinity());
  CHECK(format_point(SpherePoint::infinity()) == "inf");
  CHECK(format_point(parse_point("-6")) == "-6");
}

TEST_CASE("format round-trips") {
  CHECK(format_complex(Complex(-6.0, 0.0)) == "-6");
  CHECK(format_complex(Complex(-2.0, std::sqrt(2.0))) == "-2+1.4142135623730951i");
  CHECK(format_complex(Complex(0.0, 1.0)) == "1i");
  CHECK(format_complex(Complex(0.0, -0.0)) == "0");

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1e3, 1e3);
  for (int i = 0; i < 500; ++i) {
    const Complex z(d(rng), i % 5 == 0 ? 0.0 : d(rng));
    CHECK(parse_complex(format_complex(z)) == z);
  }
}
