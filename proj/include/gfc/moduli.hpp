#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfc/lift.hpp"

namespace gfc {

enum class Verdict { FieldOfModuliNotR, ModuliRAndReal, ModuliRNotReal };

enum class Assumption { Unconditional, ConditionalOnNormalizer };

struct SearchLimits {
  double epsilon = kDefaultEpsilon;
  int order_cap = 0;                   // 0 -> 2 * (n+1)! capped at 40320
  std::int64_t lift_cap = 1000000;
  std::uint64_t seed = 1;
};

struct Exhaustion {
  std::int64_t antisymmetries = 0;
  std::int64_t lifts_scanned = 0;
  std::int64_t involutions_found = 0;
};

struct ModuliClassification {
  Verdict verdict = Verdict::FieldOfModuliNotR;
  std::optional<CurveAutomorphism> witness;
  Exhaustion exhaustion;
  Assumption assumption = Assumption::ConditionalOnNormalizer;
};

/// Decide whether the field of moduli is R and, if so, whether R is a field
/// of definition, by exhausting anticonformal symmetries of the cone
/// configuration and their k^n lifts. Throws NonHyperbolic for the types
/// (2,2), (2,3), (3,2) and CapExceeded when k^n > lift_cap.
ModuliClassification classify(const FermatCurve& curve, const SearchLimits& limits = {});

struct InvolutionSearch {
  std::optional<CurveAutomorphism> witness;
  Exhaustion exhaustion;
};

/// Some anticonformal involution of the curve, or a certified-empty result
/// carrying the exhaustion counts.
InvolutionSearch find_anticonformal_involution(const FermatCurve& curve,
                                               const SearchLimits& limits = {});

/// Isomorphism family indexed by Gal(C/R) = {id, conjugation}: f_id is the
/// identity, f_sigma the curve-to-conjugate-curve map written as permutation
/// + constants + coordinatewise conjugation.
struct WeilFamily {
  CurveAutomorphism f_sigma;
};

/// True iff the sigma-twisted composite of f_sigma with itself is
/// projectively the identity (the lone nontrivial cocycle condition of an
/// order-2 Galois group). Throws NotAMapToConjugate when f_sigma does not
/// map the curve to its conjugate.
bool check_weil_cocycle(const FermatCurve& curve, const WeilFamily& w,
                        double eps = kDefaultEpsilon);

/// One verified theorem instance: the configuration the cited proof case
/// prescribes, the classification it produced, and whether that matches the
/// asserted conclusion.
struct TheoremCheck {
  std::string name;
  std::vector<SpherePoint> configuration;
  ModuliClassification result;
  bool conforms = false;
  std::string detail;
};

/// Family x1^k + x2^k + x3^k = 0, lambda1 x1^k + ..., with
/// lambda1 = -|lambda2|^2; moduli R for every k, real whenever k is odd.
TheoremCheck verify_theorem1(int k, Complex lambda2, const SearchLimits& limits = {});

/// Type (2,4) table row (N, A, B, C) on its committed sample configuration;
/// asserts a real curve with an explicit involution.
TheoremCheck verify_humbert_case(const OrbitTypeSolution& row, const SearchLimits& limits = {});

/// The committed type (2,5) curve with lambda1 = -6, lambda2 = -2 + sqrt(2) i:
/// moduli R, an order-4 anticonformal witness, and no involution at all.
TheoremCheck verify_hidalgo(const SearchLimits& limits = {});

/// Type (p, n) with p odd prime and n even: moduli R forces real.
TheoremCheck verify_prime_even(int p, int n, const SearchLimits& limits = {});

/// Types (p,3) and (p,5) with p odd prime: the proof-case configurations.
/// For n == 5, which_case is 1..4 for (i)..(iv); for n == 3 the lone N = 4
/// case is checked.
TheoremCheck verify_p3_or_p5(int p, int n, int which_case, const SearchLimits& limits = {});

/// Classify the curve cut out by an arbitrary cone configuration after
/// cross-ratio normalization.
ModuliClassification classify_configuration(int k, const std::vector<SpherePoint>& points,
                                            const SearchLimits& limits = {});

const char* verdict_name(Verdict v);
const char* assumption_name(Assumption a);

}  // namespace gfc
