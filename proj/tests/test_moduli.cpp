#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gfc/moduli.hpp"
#include "support.hpp"

using namespace gfc;

namespace {

const double eps = kDefaultEpsilon;

Complex hidalgo_lambda2() { return Complex(-2.0, std::sqrt(2.0)); }

FermatCurve family_curve(int k, Complex l2) {
  return build_curve(k, {Complex(-std::norm(l2), 0.0), l2, -l2});
}

FermatCurve real_humbert() { return build_curve(2, {Complex(-6.0), Complex(1.5)}); }

}  // namespace

TEST_CASE("classify: Hidalgo curve is moduli R but not real") {
  const ModuliClassification cls = classify(family_curve(2, hidalgo_lambda2()));
  CHECK(cls.verdict == Verdict::ModuliRNotReal);
  CHECK(cls.assumption == Assumption::Unconditional);
  REQUIRE(cls.witness.has_value());
  CHECK(cls.witness->anticonformal);
  CHECK(auto_order(*cls.witness, 100) == 4);
  CHECK(is_curve_automorphism(family_curve(2, hidalgo_lambda2()), *cls.witness));
  // Exhaustion: every anticonformal symmetry times all 32 lifts, no involution.
  CHECK(cls.exhaustion.antisymmetries >= 1);
  CHECK(cls.exhaustion.lifts_scanned == cls.exhaustion.antisymmetries * 32);
  CHECK(cls.exhaustion.involutions_found == 0);
}

TEST_CASE("classify: real-lambda Humbert curve is real with a J-type witness") {
  const ModuliClassification cls = classify(real_humbert());
  CHECK(cls.verdict == Verdict::ModuliRAndReal);
  CHECK(cls.assumption == Assumption::Unconditional);
  REQUIRE(cls.witness.has_value());
  CHECK(cls.witness->anticonformal);
  CHECK(is_involution(*cls.witness, eps));
  CHECK(is_curve_automorphism(real_humbert(), *cls.witness));
}

TEST_CASE("classify: generic perturbed lambdas have field of moduli other than R") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const FermatCurve curve =
        build_curve(2, {test::random_complex(rng), test::random_complex(rng),
                        Complex(4.0, 0.25 + 0.1 * trial)});
    const ModuliClassification cls = classify(curve);
    CHECK(cls.verdict == Verdict::FieldOfModuliNotR);
    CHECK(!cls.witness.has_value());
  }
}

TEST_CASE("classify: theorem-1 family for odd k is real") {
  for (const int k : {3, 5}) {
    const ModuliClassification cls = classify(family_curve(k, hidalgo_lambda2()));
    CHECK(cls.verdict == Verdict::ModuliRAndReal);
    REQUIRE(cls.witness.has_value());
    CHECK(is_involution(*cls.witness, eps));
  }
}

TEST_CASE("classify guards") {
  CHECK_THROWS_AS(classify(build_curve(2, {})), NonHyperbolic);
  CHECK_THROWS_AS(classify(build_curve(2, {Complex(-6.0)})), NonHyperbolic);
  SearchLimits tight;
  tight.lift_cap = 16;
  CHECK_THROWS_AS(classify(family_curve(2, hidalgo_lambda2()), tight), CapExceeded);
}

TEST_CASE("classify: composite k is flagged conditional") {
  // k = 4, n = 2: hyperbolic, uniqueness not covered.
  const ModuliClassification cls = classify(build_curve(4, {}));
  CHECK(cls.assumption == Assumption::ConditionalOnNormalizer);
  CHECK(cls.verdict == Verdict::ModuliRAndReal);  // real coefficients: J works
}

TEST_CASE("find_anticonformal_involution") {
  const InvolutionSearch hit = find_anticonformal_involution(family_curve(3, hidalgo_lambda2()));
  REQUIRE(hit.witness.has_value());
  CHECK(is_involution(*hit.witness, eps));

  const InvolutionSearch miss = find_anticonformal_involution(family_curve(2, hidalgo_lambda2()));
  CHECK(!miss.witness.has_value());
  CHECK(miss.exhaustion.lifts_scanned == miss.exhaustion.antisymmetries * 32);
  CHECK(miss.exhaustion.involutions_found == 0);

  const InvolutionSearch real_hit = find_anticonformal_involution(real_humbert());
  REQUIRE(real_hit.witness.has_value());
  CHECK(is_involution(*real_hit.witness, eps));
}

TEST_CASE("weil cocycle") {
  SUBCASE("J on a real-lambda curve passes") {
    WeilFamily w;
    w.f_sigma = CurveAutomorphism::identity(5);
    w.f_sigma.anticonformal = true;
    CHECK(check_weil_cocycle(real_humbert(), w));
  }
  SUBCASE("an involution composed into the family passes") {
    const ModuliClassification cls = classify(family_curve(3, hidalgo_lambda2()));
    REQUIRE(cls.witness.has_value());
    WeilFamily w{*cls.witness};
    CHECK(check_weil_cocycle(family_curve(3, hidalgo_lambda2()), w));
  }
  SUBCASE("every lift variant fails on the Hidalgo curve") {
    const FermatCurve curve = family_curve(2, hidalgo_lambda2());
    const auto anti = symmetries(cone_points(curve), Orientation::Anticonformal);
    REQUIRE(!anti.empty());
    int variants = 0;
    for (const ConfigSymmetry& s : anti) {
      const LiftFamily fam = enumerate_lifts(curve, s, 1000000);
      for (const CurveAutomorphism& lift : fam.lifts) {
        WeilFamily w{lift};
        CHECK(!check_weil_cocycle(curve, w));
        ++variants;
      }
    }
    CHECK(variants == 32 * static_cast<int>(anti.size()));
  }
  SUBCASE("maps that miss the conjugate curve are rejected") {
    WeilFamily w;
    w.f_sigma = CurveAutomorphism::identity(5);
    w.f_sigma.anticonformal = true;
    w.f_sigma.c[3] = Complex(0.0, 1.0);  // breaks the membership conditions
    CHECK_THROWS_AS(check_weil_cocycle(real_humbert(), w), NotAMapToConjugate);
    WeilFamily conformal;
    conformal.f_sigma = CurveAutomorphism::identity(5);
    CHECK_THROWS_AS(check_weil_cocycle(real_humbert(), conformal), NotAMapToConjugate);
  }
  SUBCASE("cocycle equivalence: some variant passes iff an involution exists") {
    for (const int k : {2, 3}) {
      const FermatCurve curve = family_curve(k, hidalgo_lambda2());
      const auto anti = symmetries(cone_points(curve), Orientation::Anticonformal);
      bool any_cocycle = false;
      for (const ConfigSymmetry& s : anti)
        for (const CurveAutomorphism& lift : enumerate_lifts(curve, s, 1000000).lifts)
          if (check_weil_cocycle(curve, WeilFamily{lift})) any_cocycle = true;
      const bool involution = find_anticonformal_involution(curve).witness.has_value();
      CHECK(any_cocycle == involution);
    }
  }
}

TEST_CASE("odd-order descent at the lift level") {
  const FermatCurve curve = family_curve(3, hidalgo_lambda2());
  const auto anti = symmetries(cone_points(curve), Orientation::Anticonformal);
  REQUIRE(!anti.empty());
  int seen = 0;
  for (const ConfigSymmetry& s : anti) {
    if (order(s.map, 100) != 2) continue;
    for (const CurveAutomorphism& lift : enumerate_lifts(curve, s, 1000000).lifts) {
      const int q = auto_order(lift, 100);
      if (q % 2 == 0 && (q / 2) % 2 == 1 && q > 2) {
        const CurveAutomorphism power = auto_power(lift, q / 2);
        CHECK(is_involution(power, eps));
        ++seen;
      }
    }
  }
  CHECK(seen > 0);
  CHECK(classify(curve).verdict == Verdict::ModuliRAndReal);
}

TEST_CASE("renormalization invariance of the verdict") {
  std::mt19937_64 rng(99);
  struct Sample {
    int k;
    std::vector<SpherePoint> points;
    Verdict expect;
  };
  std::vector<Sample> samples;
  {
    const Complex l2 = hidalgo_lambda2();
    samples.push_back({2,
                       {SpherePoint::infinity(), SpherePoint(Complex(0.0)), SpherePoint(Complex(1.0)),
                        SpherePoint(Complex(-6.0)), SpherePoint(l2), SpherePoint(-l2)},
                       Verdict::ModuliRNotReal});
    samples.push_back({3,
                       {SpherePoint::infinity(), SpherePoint(Complex(0.0)), SpherePoint(Complex(1.0)),
                        SpherePoint(Complex(-6.0)), SpherePoint(l2), SpherePoint(-l2)},
                       Verdict::ModuliRAndReal});
    samples.push_back({2,
                       {SpherePoint::infinity(), SpherePoint(Complex(0.0)), SpherePoint(Complex(1.0)),
                        SpherePoint(Complex(-6.0)), SpherePoint(Complex(1.5))},
                       Verdict::ModuliRAndReal});
    samples.push_back({2,
                       {SpherePoint::infinity(), SpherePoint(Complex(0.0)), SpherePoint(Complex(1.0)),
                        SpherePoint(Complex(2.0, 1.0)), SpherePoint(Complex(-1.0, 0.5))},
                       Verdict::FieldOfModuliNotR});
    samples.push_back({3,
                       {SpherePoint::infinity(), SpherePoint(Complex(0.0)), SpherePoint(Complex(1.0)),
                        SpherePoint(test::omega3()), SpherePoint(test::omega3() * test::omega3())},
                       Verdict::ModuliRAndReal});
  }
  for (const Sample& sample : samples) {
    CHECK(classify_configuration(sample.k, sample.points).verdict == sample.expect);
    for (int trial = 0; trial < 20; ++trial) {
      const ExtendedMobius g = test::random_mobius(rng);
      std::vector<SpherePoint> moved;
      for (const SpherePoint& p : sample.points) moved.push_back(apply(g, p));
      SearchLimits limits;
      limits.epsilon = 1e-8;  // images carry the conditioning of g
      CHECK(classify_configuration(sample.k, moved, limits).verdict == sample.expect);
    }
  }
}

TEST_CASE("theorem conformance: moduli R forces real in the covered types") {
  // (2,4), (p, n even), (p,3), (p,5): whenever any anticonformal symmetry
  // exists, classify must come back real.
  std::mt19937_64 rng(123);
  int covered = 0;
  for (int trial = 0; trial < 40; ++trial) {
    // Conjugation-stable lambda sets in the covered shapes.
    const int shape = trial % 4;
    int k = 0;
    std::vector<Complex> lambdas;
    const Complex z(1.5 + 0.1 * (trial % 7), 0.7 + 0.05 * (trial % 5));
    if (shape == 0) {  // (2,4)
      k = 2;
      lambdas = {z, std::conj(z)};
    } else if (shape == 1) {  // (3,4): n even
      k = 3;
      lambdas = {z, std::conj(z)};
    } else if (shape == 2) {  // (3,3)
      k = 3;
      lambdas = {Complex(-1.0 - 0.1 * (trial % 9), 0.0)};
    } else {  // (3,5)
      k = 3;
      lambdas = {z, std::conj(z), Complex(-2.0 - 0.1 * (trial % 9), 0.0)};
    }
    const FermatCurve curve = build_curve(k, lambdas);
    const ModuliClassification cls = classify(curve);
    if (cls.verdict == Verdict::FieldOfModuliNotR) continue;
    CHECK(cls.verdict == Verdict::ModuliRAndReal);
    ++covered;
  }
  CHECK(covered >= 30);  // conjugation-stable inputs should mostly carry a symmetry
}

TEST_CASE("verify_theorem wrappers conform") {
  CHECK(verify_theorem1(3, hidalgo_lambda2()).conforms);
  CHECK(verify_theorem1(2, hidalgo_lambda2()).conforms);  // moduli R only
  CHECK(verify_hidalgo().conforms);
  for (const auto& row : orbit_type_solutions(4, 5)) CHECK(verify_humbert_case(row).conforms);
  CHECK(verify_prime_even(3, 4).conforms);
  for (int c = 1; c <= 4; ++c) CHECK(verify_p3_or_p5(3, 5, c).conforms);
  CHECK(verify_p3_or_p5(3, 3, 0).conforms);
  CHECK(!verify_prime_even(4, 4).conforms);  // rejects non-prime p
}
