#pragma once

#include <vector>

#include "gfc/curve.hpp"
#include "gfc/linalg.hpp"

namespace gfc {

/// All k^n lifts of one orbifold symmetry: the solved powers t_i = c_i^k
/// (projective, t_1 = 1) and the automorphisms themselves, one per root
/// choice with the first exponent gauged to zero.
struct LiftFamily {
  ConfigSymmetry symmetry;
  std::vector<Complex> tk;
  std::vector<CurveAutomorphism> lifts;
};

/// Solve for t with x_i -> c_i x_{sigma^{-1}(i)} (coordinates conjugated
/// first when anticonformal) mapping the row space of Q into itself. The
/// system is linear in t (conformal) or in conj(t) (anticonformal); membership
/// of v in rowspace(Q) is the two conditions v_2 = sum_{m>=3} v_m and
/// v_1 = v_3 + sum_j lambda_j v_{j+3}. Throws NoLift unless the solution
/// space is exactly one-dimensional with all entries nonzero.
std::vector<Complex> solve_lift_constants(const FermatCurve& curve, const ConfigSymmetry& s,
                                          double eps = kDefaultEpsilon);

/// Throws CapExceeded when k^n > cap.
LiftFamily enumerate_lifts(const FermatCurve& curve, const ConfigSymmetry& s, std::int64_t cap,
                           double eps = kDefaultEpsilon);

/// Group law: perm = sigma_1 sigma_2, flag = XOR, and
/// c_i = c1_i * chi_1(c2_{sigma_1^{-1}(i)}) with chi_1 conjugating iff a1 is
/// anticonformal.
CurveAutomorphism compose_autos(const CurveAutomorphism& a1, const CurveAutomorphism& a2);

CurveAutomorphism auto_power(const CurveAutomorphism& a, int e);

bool auto_is_identity(const CurveAutomorphism& a, double eps = kDefaultEpsilon);

int auto_order(const CurveAutomorphism& a, int cap, double eps = kDefaultEpsilon);

bool is_involution(const CurveAutomorphism& a, double eps = kDefaultEpsilon);

/// Rank test (transformed rows lie in rowspace(Q)) plus a spot check on 20
/// deterministic pseudo-random fiber points.
bool is_curve_automorphism(const FermatCurve& curve, const CurveAutomorphism& a,
                           double eps = kDefaultEpsilon, std::uint64_t seed = 0x5eed5eedULL);

}  // namespace gfc
