#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gfc/linalg.hpp"
#include "support.hpp"

using namespace gfc;

namespace {

CMatrix from_rows(const std::vector<std::vector<Complex>>& rows) {
  CMatrix m;
  for (const auto& r : rows) m.append_row(r);
  return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(from_rows({{1, 0}, {0, 1}}), 1e-12) == 2);
  CHECK(rank(from_rows({{1, 2}, {2, 4}}), 1e-12) == 1);
  CHECK(rank(from_rows({{Complex(0, 1), 1}, {1, Complex(0, -1)}}), 1e-12) == 1);
  CHECK(rank(from_rows({{0, 0}, {0, 0}}), 1e-12) == 0);
}

TEST_CASE("nullspace vectors satisfy A x = 0") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    // Random rank-r matrix: r independent rows plus random combinations.
    const int cols = 3 + static_cast<int>(rng() % 5);
    const int r = 1 + static_cast<int>(rng() % (cols - 1));
    std::vector<std::vector<Complex>> base(r, std::vector<Complex>(cols));
    for (auto& row : base)
      for (auto& e : row) e = test::random_complex(rng);
    std::vector<std::vector<Complex>> rows = base;
    for (int extra = 0; extra < 2; ++extra) {
      std::vector<Complex> mix(cols, Complex(0.0));
      for (const auto& row : base) {
        const Complex w = test::random_complex(rng);
        for (int c = 0; c < cols; ++c) mix[c] += w * row[c];
      }
      rows.push_back(std::move(mix));
    }
    const CMatrix m = from_rows(rows);
    const NullspaceResult ns = nullspace(m, 1e-10);
    CHECK(ns.rank <= r);
    CHECK(static_cast<int>(ns.basis.size()) == cols - ns.rank);
    for (const auto& x : ns.basis) {
      double xmax = 0;
      for (const Complex& e : x) xmax = std::max(xmax, std::abs(e));
      CHECK(xmax > 0);
      for (const auto& row : rows) {
        Complex s = 0;
        for (int c = 0; c < cols; ++c) s += row[c] * x[c];
        CHECK(std::abs(s) < 1e-8 * std::max(1.0, m.max_modulus()) * xmax);
      }
    }
  }
}
