#pragma once

#include <array>
#include <complex>

#include "gfc/errors.hpp"

namespace gfc {

using Complex = std::complex<double>;

inline constexpr double kDefaultEpsilon = 1e-9;

// Hard ceiling for order searches: 2 * 8! covers every configuration this
// library accepts (a Mobius map preserving a set of m >= 3 points has order
// at most 2 * m!).
inline constexpr int kOrderCapCeiling = 40320;

int default_order_cap(int config_size);

/// Point of the Riemann sphere as a projective pair [u : v], v = 0 meaning
/// the point at infinity. Arithmetic never divides by v, so infinity needs
/// no special-casing downstream.
struct SpherePoint {
  Complex u{0.0, 0.0};
  Complex v{1.0, 0.0};

  SpherePoint() = default;
  explicit SpherePoint(Complex z) : u(z), v(1.0, 0.0) {}
  SpherePoint(Complex u_, Complex v_);

  static SpherePoint infinity() { return SpherePoint(Complex(1.0, 0.0), Complex(0.0, 0.0)); }

  bool is_infinity(double eps = kDefaultEpsilon) const;

  /// Finite value u / v. Only meaningful when not at infinity.
  Complex value() const { return u / v; }

  /// Scale so that v = 1, or (u, v) = (1, 0) at infinity.
  SpherePoint canonical(double eps = kDefaultEpsilon) const;
};

/// Chordal metric on the sphere (diameter 2). Scale-invariant in both
/// projective representatives, so it treats infinity like any other point.
double chordal_distance(const SpherePoint& p, const SpherePoint& q);

/// Mobius transformation with an orientation flag. The matrix acts on
/// projective pairs; when `anticonformal` is set the input is conjugated
/// first: z -> (a conj(z) + b) / (c conj(z) + d).
struct ExtendedMobius {
  // Row-major 2x2: {a, b, c, d}.
  std::array<Complex, 4> m{Complex(1), Complex(0), Complex(0), Complex(1)};
  bool anticonformal = false;

  static ExtendedMobius identity() { return ExtendedMobius{}; }
  static ExtendedMobius conjugation();
  static ExtendedMobius from_matrix(Complex a, Complex b, Complex c, Complex d,
                                    bool anticonformal = false);
  /// z -> s * z (or s * conj(z)).
  static ExtendedMobius scaling(Complex s, bool anticonformal = false);
  /// z -> s / z (or s / conj(z)).
  static ExtendedMobius inversion(Complex s, bool anticonformal = false);

  Complex det() const { return m[0] * m[3] - m[1] * m[2]; }
  double max_modulus() const;
  /// Scale the matrix so its largest entry has modulus 1.
  ExtendedMobius normalized() const;
};

SpherePoint apply(const ExtendedMobius& t, const SpherePoint& p);

/// Group law: apply(compose(t1, t2), p) == apply(t1, apply(t2, p)).
ExtendedMobius compose(const ExtendedMobius& t1, const ExtendedMobius& t2);

ExtendedMobius inverse(const ExtendedMobius& t);

bool is_identity(const ExtendedMobius& t, double eps = kDefaultEpsilon);

/// Equal as maps of the sphere: same orientation flag and matrices agreeing
/// up to one nonzero complex scalar (entrywise after normalization).
bool projectively_equal(const ExtendedMobius& s, const ExtendedMobius& t,
                        double eps = kDefaultEpsilon);

/// The unique conformal map sending p -> infinity, q -> 0, r -> 1.
/// Throws DegenerateTriple when two of the inputs collide within eps.
ExtendedMobius mobius_to_standard(const SpherePoint& p, const SpherePoint& q,
                                  const SpherePoint& r, double eps = kDefaultEpsilon);

/// The unique conformal map sending (p, q, r) to (P, Q, R).
ExtendedMobius mobius_through(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r,
                              const SpherePoint& P, const SpherePoint& Q, const SpherePoint& R,
                              double eps = kDefaultEpsilon);

/// Smallest q >= 1 with t^q projectively the identity. Anticonformal maps of
/// finite order always report an even order. Throws NotFiniteOrder past cap.
int order(const ExtendedMobius& t, int cap, double eps = kDefaultEpsilon);

struct NormalForm {
  int n = 0;                 // parameter of the model map z -> e^{2 pi i / n} / conj(z)
  ExtendedMobius conjugator; // conformal; conjugator . t . conjugator^{-1} is the model map
};

/// Conjugate a finite-order anticonformal map into the rotation-reflection
/// model z -> eta / conj(z) with |eta| = 1; n is the multiplicative order of
/// eta. n = 1 is the reflection case (pointwise-fixed circle), n = 2 the
/// fixed-point-free involution.
NormalForm anticonformal_normal_form(const ExtendedMobius& t, int order_cap,
                                     double eps = kDefaultEpsilon);

}  // namespace gfc
