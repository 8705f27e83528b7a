#include "gfc/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace gfc {

namespace {

double mod2(Complex z) { return std::norm(z); }

// Cross-product-style determinant of two projective pairs; zero iff the
// points coincide.
Complex cross(const SpherePoint& p, const SpherePoint& q) {
  return p.u * q.v - p.v * q.u;
}

}  // namespace

int default_order_cap(int config_size) {
  long long cap = 2;
  for (int i = 2; i <= config_size; ++i) {
    cap *= i;
    if (cap >= kOrderCapCeiling) return kOrderCapCeiling;
  }
  return static_cast<int>(std::min<long long>(cap, kOrderCapCeiling));
}

SpherePoint::SpherePoint(Complex u_, Complex v_) : u(u_), v(v_) {
  if (u == Complex(0.0, 0.0) && v == Complex(0.0, 0.0))
    throw Error("SpherePoint: (0,0) is not a projective pair");
}

bool SpherePoint::is_infinity(double eps) const {
  return std::abs(v) <= eps * std::abs(u);
}

SpherePoint SpherePoint::canonical(double eps) const {
  if (is_infinity(eps)) return infinity();
  return SpherePoint(u / v);
}

double chordal_distance(const SpherePoint& p, const SpherePoint& q) {
  const double num = 2.0 * std::abs(cross(p, q));
  const double den = std::sqrt(mod2(p.u) + mod2(p.v)) * std::sqrt(mod2(q.u) + mod2(q.v));
  return num / den;
}

ExtendedMobius ExtendedMobius::conjugation() {
  ExtendedMobius t;
  t.anticonformal = true;
  return t;
}

ExtendedMobius ExtendedMobius::from_matrix(Complex a, Complex b, Complex c, Complex d,
                                           bool anticonformal) {
  ExtendedMobius t;
  t.m = {a, b, c, d};
  t.anticonformal = anticonformal;
  if (std::abs(t.det()) <= 1e-14 * t.max_modulus() * t.max_modulus())
    throw Error("ExtendedMobius: singular matrix");
  return t;
}

ExtendedMobius ExtendedMobius::scaling(Complex s, bool anticonformal) {
  return from_matrix(s, 0.0, 0.0, 1.0, anticonformal);
}

ExtendedMobius ExtendedMobius::inversion(Complex s, bool anticonformal) {
  return from_matrix(0.0, s, 1.0, 0.0, anticonformal);
}

double ExtendedMobius::max_modulus() const {
  double best = 0.0;
  for (const Complex& e : m) best = std::max(best, std::abs(e));
  return best;
}

ExtendedMobius ExtendedMobius::normalized() const {
  ExtendedMobius t = *this;
  const double s = max_modulus();
  if (s > 0.0)
    for (Complex& e : t.m) e /= s;
  return t;
}

SpherePoint apply(const ExtendedMobius& t, const SpherePoint& p) {
  Complex u = p.u, v = p.v;
  if (t.anticonformal) {
    u = std::conj(u);
    v = std::conj(v);
  }
  Complex ru = t.m[0] * u + t.m[1] * v;
  Complex rv = t.m[2] * u + t.m[3] * v;
  const double s = std::max(std::abs(ru), std::abs(rv));
  if (s == 0.0) throw Error("apply: singular transformation");
  return SpherePoint(ru / s, rv / s);
}

ExtendedMobius compose(const ExtendedMobius& t1, const ExtendedMobius& t2) {
  std::array<Complex, 4> b = t2.m;
  if (t1.anticonformal)
    for (Complex& e : b) e = std::conj(e);
  const std::array<Complex, 4>& a = t1.m;
  ExtendedMobius r;
  r.m = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
         a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  r.anticonformal = t1.anticonformal != t2.anticonformal;
  return r.normalized();
}

ExtendedMobius inverse(const ExtendedMobius& t) {
  // Projective inverse via the adjugate; conjugated when the flag is set so
  // that compose(t, inverse(t)) is the identity with a conformal flag.
  std::array<Complex, 4> adj = {t.m[3], -t.m[1], -t.m[2], t.m[0]};
  if (t.anticonformal)
    for (Complex& e : adj) e = std::conj(e);
  ExtendedMobius r;
  r.m = adj;
  r.anticonformal = t.anticonformal;
  return r.normalized();
}

bool is_identity(const ExtendedMobius& t, double eps) {
  if (t.anticonformal) return false;
  const double s = t.max_modulus();
  if (s == 0.0) return false;
  return std::abs(t.m[1]) <= eps * s && std::abs(t.m[2]) <= eps * s &&
         std::abs(t.m[0] - t.m[3]) <= eps * s;
}

bool projectively_equal(const ExtendedMobius& s, const ExtendedMobius& t, double eps) {
  if (s.anticonformal != t.anticonformal) return false;
  const ExtendedMobius a = s.normalized(), b = t.normalized();
  // Align phases on a's largest entry, then compare entrywise.
  std::size_t j = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (std::abs(a.m[i]) > std::abs(a.m[j])) j = i;
  if (std::abs(b.m[j]) <= eps) return false;
  const Complex mu = b.m[j] / a.m[j];
  for (std::size_t i = 0; i < 4; ++i)
    if (std::abs(mu * a.m[i] - b.m[i]) > eps * (1.0 + std::abs(mu))) return false;
  return true;
}

ExtendedMobius mobius_to_standard(const SpherePoint& p, const SpherePoint& q,
                                  const SpherePoint& r, double eps) {
  if (chordal_distance(p, q) <= eps || chordal_distance(p, r) <= eps ||
      chordal_distance(q, r) <= eps)
    throw DegenerateTriple("mobius_to_standard needs three distinct points");
  // z -> [(z x q)(r x p) : (z x p)(r x q)] fixes the images by construction.
  const Complex alpha = cross(r, p);
  const Complex beta = cross(r, q);
  ExtendedMobius t;
  t.m = {q.v * alpha, -q.u * alpha, p.v * beta, -p.u * beta};
  t.anticonformal = false;
  return t.normalized();
}

ExtendedMobius mobius_through(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r,
                              const SpherePoint& P, const SpherePoint& Q, const SpherePoint& R,
                              double eps) {
  return compose(inverse(mobius_to_standard(P, Q, R, eps)), mobius_to_standard(p, q, r, eps));
}

int order(const ExtendedMobius& t, int cap, double eps) {
  if (cap < 1) throw Error("order: cap must be >= 1");
  ExtendedMobius acc = t.normalized();
  for (int q = 1; q <= cap; ++q) {
    if (is_identity(acc, eps)) return q;
    acc = compose(t, acc);
  }
  throw NotFiniteOrder("no power up to " + std::to_string(cap) + " is the identity");
}

namespace {

// Fixed points of a conformal map with two distinct fixed points, as the
// eigenvectors of its matrix.
std::pair<SpherePoint, SpherePoint> fixed_point_pair(const ExtendedMobius& t, double eps) {
  const Complex a = t.m[0], b = t.m[1], c = t.m[2], d = t.m[3];
  const Complex tr = a + d;
  const Complex disc = std::sqrt(tr * tr - 4.0 * t.det());
  const Complex l1 = (tr + disc) / 2.0;
  const Complex l2 = (tr - disc) / 2.0;
  if (std::abs(l1 - l2) <= eps * t.max_modulus())
    throw Error("fixed_point_pair: eigenvalues coincide");
  auto eigvec = [&](Complex l) {
    // (a - l) u + b v = 0 and c u + (d - l) v = 0; take the better row.
    if (std::max(std::abs(a - l), std::abs(b)) >= std::max(std::abs(c), std::abs(d - l)))
      return SpherePoint(b, l - a);
    return SpherePoint(l - d, c);
  };
  return {eigvec(l1), eigvec(l2)};
}

// A point at chordal distance > delta from everything in `avoid`.
SpherePoint pick_point_away(const std::vector<SpherePoint>& avoid, double delta) {
  const SpherePoint candidates[] = {
      SpherePoint(Complex(0, 0)),   SpherePoint(Complex(1, 0)),  SpherePoint(Complex(-1, 0)),
      SpherePoint(Complex(0, 1)),   SpherePoint(Complex(0, -1)), SpherePoint(Complex(2, 0)),
      SpherePoint(Complex(0.5, 0.5)), SpherePoint::infinity(),   SpherePoint(Complex(3, 1)),
      SpherePoint(Complex(-2, 2))};
  for (const SpherePoint& c : candidates) {
    bool ok = true;
    for (const SpherePoint& p : avoid)
      if (chordal_distance(c, p) <= delta) ok = false;
    if (ok) return c;
  }
  throw Error("pick_point_away: no candidate point found");
}

// Reads the parameter eta of an anti-diagonal conjugated map z -> eta/conj(z).
Complex antidiagonal_parameter(const ExtendedMobius& t, double eps) {
  const double s = t.max_modulus();
  if (std::abs(t.m[0]) > eps * s * 10 || std::abs(t.m[3]) > eps * s * 10)
    throw Error("normal form: conjugated map is not anti-diagonal");
  return t.m[1] / t.m[2];
}

// Conjugator update z -> rho * z that rescales eta to the unit circle.
ExtendedMobius rescale_to_unit(const ExtendedMobius& conj, const ExtendedMobius& t, double eps,
                               Complex* eta_out) {
  ExtendedMobius c = conj;
  ExtendedMobius conjugated = compose(compose(c, t), inverse(c));
  Complex eta = antidiagonal_parameter(conjugated, eps);
  const double rho = 1.0 / std::sqrt(std::abs(eta));
  c = compose(ExtendedMobius::scaling(Complex(rho, 0.0)), c);
  conjugated = compose(compose(c, t), inverse(c));
  eta = antidiagonal_parameter(conjugated, eps);
  // Flip eta into the closed upper half plane so paper-style parameters
  // e^{2 pi i / N} come out on the nose whenever they are reachable.
  if (eta.imag() < -eps) {
    c = compose(ExtendedMobius::inversion(Complex(1.0, 0.0)), c);
    conjugated = compose(compose(c, t), inverse(c));
    eta = antidiagonal_parameter(conjugated, eps);
  }
  *eta_out = eta;
  return c;
}

int multiplicative_order(Complex eta, int cap, double eps) {
  Complex p = eta;
  for (int j = 1; j <= cap; ++j) {
    if (std::abs(p - Complex(1.0, 0.0)) <= eps * 10) return j;
    p *= eta;
  }
  throw NotFiniteOrder("normal form parameter is not a root of unity within tolerance");
}

}  // namespace

NormalForm anticonformal_normal_form(const ExtendedMobius& t, int order_cap, double eps) {
  if (!t.anticonformal) throw NotAnticonformal("normal form needs an anticonformal map");
  const int q = order(t, order_cap, eps);
  const int m_half = q / 2;

  if (m_half >= 2) {
    // t swaps the two fixed points of the elliptic rotation t^2; send them
    // to {0, infinity} and rescale the residual parameter onto the circle.
    const ExtendedMobius t2 = compose(t, t);
    auto [p, r] = fixed_point_pair(t2, eps);
    const SpherePoint third = pick_point_away({p, r}, 0.05);
    ExtendedMobius c = mobius_to_standard(r, p, third, eps);  // p -> 0, r -> inf
    Complex eta;
    c = rescale_to_unit(c, t, eps, &eta);
    NormalForm nf;
    nf.conjugator = c;
    nf.n = multiplicative_order(eta, 2 * m_half, eps);
    return nf;
  }

  // Anticonformal involution: reflection (fixed circle) vs antipodal type,
  // separated by the sign of mu in M conj(M) = mu I.
  const std::array<Complex, 4>& a = t.m;
  const Complex p00 = a[0] * std::conj(a[0]) + a[1] * std::conj(a[2]);
  const Complex p11 = a[2] * std::conj(a[1]) + a[3] * std::conj(a[3]);
  const double mu = (p00.real() + p11.real()) / 2.0;

  if (mu > 0.0) {
    // Fixed circle: c|z|^2 + d z - a conj(z) - b = 0 splits into two real
    // equations that are proportional; keep the better-scaled one.
    const Complex A = a[0], B = a[1], C = a[2], D = a[3];
    const double re[4] = {C.real(), (D - A).real(), -(D + A).imag(), -B.real()};
    const double im[4] = {C.imag(), (D - A).imag(), (D + A).real(), -B.imag()};
    double nr = 0, ni = 0;
    for (int i = 0; i < 4; ++i) {
      nr += re[i] * re[i];
      ni += im[i] * im[i];
    }
    const double* e = (nr >= ni) ? re : im;
    const double alpha = e[0], beta = e[1], gamma = e[2], delta = e[3];
    const double lin = std::sqrt(beta * beta + gamma * gamma);
    std::array<SpherePoint, 3> f;
    if (std::abs(alpha) > 1e-9 * std::max(lin, std::abs(delta))) {
      const double cx = -beta / (2 * alpha), cy = -gamma / (2 * alpha);
      const double rad2 = cx * cx + cy * cy - delta / alpha;
      if (rad2 <= 0) throw Error("normal form: empty fixed circle");
      const double rad = std::sqrt(rad2);
      for (int i = 0; i < 3; ++i) {
        const double ang = 2.0 * M_PI * i / 3.0;
        f[i] = SpherePoint(Complex(cx + rad * std::cos(ang), cy + rad * std::sin(ang)));
      }
    } else {
      // Line through infinity.
      const double p0x = -delta * beta / (lin * lin), p0y = -delta * gamma / (lin * lin);
      const double dx = -gamma / lin, dy = beta / lin;
      f[0] = SpherePoint(Complex(p0x, p0y));
      f[1] = SpherePoint(Complex(p0x + dx, p0y + dy));
      f[2] = SpherePoint::infinity();
    }
    NormalForm nf;
    nf.conjugator = mobius_through(f[0], f[1], f[2], SpherePoint(Complex(1, 0)),
                                   SpherePoint(Complex(0, 1)), SpherePoint(Complex(-1, 0)), eps);
    nf.n = 1;
    return nf;
  }

  // Fixed-point free: pick p far from t(p), then map (t(p), p, q) to
  // (inf, 0, 1) and rescale; eta lands on -1.
  SpherePoint p = SpherePoint(Complex(0, 0));
  double best = -1.0;
  for (const Complex z : {Complex(0, 0), Complex(1, 0), Complex(0, 1), Complex(2, 1)}) {
    const SpherePoint cand(z);
    const double d = chordal_distance(cand, apply(t, cand));
    if (d > best) {
      best = d;
      p = cand;
    }
  }
  const SpherePoint tp = apply(t, p);
  const SpherePoint q3 = pick_point_away({p, tp}, 0.05);
  ExtendedMobius c = mobius_to_standard(tp, p, q3, eps);
  Complex eta;
  c = rescale_to_unit(c, t, eps, &eta);
  NormalForm nf;
  nf.conjugator = c;
  nf.n = multiplicative_order(eta, 2, eps);
  if (nf.n != 2) throw Error("normal form: fixed-point-free involution should have n = 2");
  return nf;
}

}  // namespace gfc
