#pragma once

#include <cstdint>
#include <vector>

#include "gfc/config.hpp"
#include "gfc/sphere.hpp"

namespace gfc {

/// The curve of type (k, n) cut out by the (n-1) x (n+1) coefficient matrix
/// Q acting on the k-th powers of the coordinates:
///   row 1:   x1^k + x2^k + x3^k = 0
///   row j+1: lambda_j x1^k + x2^k + x_{j+3}^k = 0   (j = 1..n-2)
struct FermatCurve {
  int k = 0;
  int n = 0;
  std::vector<Complex> lambdas;            // n - 2 entries
  std::vector<std::vector<Complex>> Q;     // (n-1) rows, (n+1) columns
  bool hyperbolic = false;                 // (n-1)(k-1) > 2
};

/// Throws InvalidLambda on entries in {0, 1} or duplicates within eps.
FermatCurve build_curve(int k, std::vector<Complex> lambdas, double eps = kDefaultEpsilon);

/// g(k, n) = 1 + (k^{n-1} / 2) ((n-1)(k-1) - 2), exactly.
/// Throws Overflow past the 64-bit range.
std::int64_t genus(std::int64_t k, std::int64_t n);

/// k^n as a 64-bit value; throws Overflow.
std::int64_t checked_power(std::int64_t base, std::int64_t exp);

/// Projective point of the ambient space.
struct CurvePoint {
  std::vector<Complex> x;

  /// Scale so the maximum-modulus entry becomes exactly 1.
  CurvePoint canonical() const;
};

/// Generalized permutation automorphism x_i -> c_i x_{sigma^{-1}(i)}, with
/// the coordinates conjugated first when anticonformal. Stored with the
/// c_1 = 1 normalization, so equality is entrywise.
struct CurveAutomorphism {
  std::vector<int> perm;   // forward images, 0-based: perm[i] = sigma(i)
  std::vector<Complex> c;  // c[0] = 1 after normalization
  bool anticonformal = false;

  static CurveAutomorphism identity(int size);
  /// Divide c through by c[0].
  CurveAutomorphism normalized() const;
};

CurvePoint apply_auto(const CurveAutomorphism& a, const CurvePoint& p);

bool autos_equal(const CurveAutomorphism& a, const CurveAutomorphism& b,
                 double eps = kDefaultEpsilon);

/// The n commuting order-k coordinate rotations a_1..a_n generating H.
std::vector<CurveAutomorphism> h_generators(const FermatCurve& curve);

/// pi([x]) = -(x2 / x1)^k, with x1 = 0 mapping to infinity.
/// Throws NotOnCurve when the residual exceeds eps.
SpherePoint quotient_map(const FermatCurve& curve, const CurvePoint& p,
                         double eps = kDefaultEpsilon);

/// Explicit point of the fiber over a non-cone point z: x1 = 1 and each
/// remaining coordinate the principal k-th root of the forced power times
/// e^{2 pi i root_choice[i] / k}. Throws RamifiedFiber over cone points.
CurvePoint fiber_point(const FermatCurve& curve, const SpherePoint& z,
                       const std::vector<int>& root_choice, double eps = kDefaultEpsilon);

/// Max residual of the defining rows after canonical scaling, compared
/// against eps.
bool on_curve(const FermatCurve& curve, const CurvePoint& p, double eps = kDefaultEpsilon);

/// (inf, 0, 1, lambda_1, ..., lambda_{n-2}) in this order.
ConeConfiguration cone_points(const FermatCurve& curve, double eps = kDefaultEpsilon);

}  // namespace gfc
