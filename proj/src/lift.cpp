#include "gfc/lift.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gfc {

namespace {

std::vector<int> inverse_perm(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

// Position weights of the two rowspace-membership conditions: a vector v is
// in rowspace(Q) iff sum_m w[m] v_m = 0 for both weight rows.
std::vector<std::vector<Complex>> membership_weights(const FermatCurve& curve) {
  const int m = curve.n + 1;
  std::vector<Complex> w1(m, Complex(0.0)), w2(m, Complex(0.0));
  w1[1] = 1.0;
  for (int pos = 2; pos < m; ++pos) w1[pos] = -1.0;
  w2[0] = 1.0;
  w2[2] = -1.0;
  for (int j = 0; j < curve.n - 2; ++j) w2[j + 3] = -curve.lambdas[j];
  return {w1, w2};
}

// Transformed row r of Q under x_i -> t_i^{1/k}-style substitution with
// permutation sigma: coefficient of x_m^k is Qe[r][sigma(m)] * u_{sigma(m)},
// where Qe and u carry a conjugation in the anticonformal case. Returns the
// coefficient matrix row over the unknowns u.
std::vector<Complex> substituted_row_coeffs(const FermatCurve& curve, const std::vector<int>& perm,
                                            bool conjugate_rows, int row,
                                            const std::vector<Complex>& weights) {
  const int m = curve.n + 1;
  std::vector<Complex> coeff(m, Complex(0.0));
  const std::vector<int> inv = inverse_perm(perm);
  for (int j = 0; j < m; ++j) {
    Complex q = curve.Q[row][j];
    if (conjugate_rows) q = std::conj(q);
    coeff[j] = q * weights[inv[j]];
  }
  return coeff;
}

}  // namespace

std::vector<Complex> solve_lift_constants(const FermatCurve& curve, const ConfigSymmetry& s,
                                          double eps) {
  const int m = curve.n + 1;
  if (static_cast<int>(s.perm.size()) != m)
    throw Error("solve_lift_constants: permutation size mismatch");
  const bool anti = s.map.anticonformal;
  const auto weights = membership_weights(curve);
  CMatrix system;
  for (int r = 0; r < curve.n - 1; ++r)
    for (const auto& w : weights)
      system.append_row(substituted_row_coeffs(curve, s.perm, anti, r, w));
  const NullspaceResult ns = nullspace(system, eps);
  const int nullity = static_cast<int>(ns.basis.size());
  if (nullity != 1)
    throw NoLift("solution space has dimension " + std::to_string(nullity) +
                 "; the permutation is not a symmetry of the curve (or the tolerance is off)");
  std::vector<Complex> t = ns.basis[0];
  if (anti)
    for (Complex& e : t) e = std::conj(e);
  double tmax = 0.0;
  for (const Complex& e : t) tmax = std::max(tmax, std::abs(e));
  for (const Complex& e : t)
    if (std::abs(e) <= eps * tmax)
      throw NoLift("a solved constant vanishes; the permutation is not a symmetry");
  const Complex t0 = t[0];
  for (Complex& e : t) e /= t0;
  return t;
}

LiftFamily enumerate_lifts(const FermatCurve& curve, const ConfigSymmetry& s, std::int64_t cap,
                           double eps) {
  LiftFamily family;
  family.symmetry = s;
  family.tk = solve_lift_constants(curve, s, eps);
  const int m = curve.n + 1;
  const std::int64_t count = checked_power(curve.k, curve.n);
  if (count > cap)
    throw CapExceeded("k^n = " + std::to_string(count) + " lifts exceed the cap of " +
                      std::to_string(cap));
  std::vector<Complex> principal(m);
  for (int i = 0; i < m; ++i)
    principal[i] = std::polar(std::pow(std::abs(family.tk[i]), 1.0 / curve.k),
                              std::arg(family.tk[i]) / curve.k);
  // Root-choice exponents for coordinates 2..n+1, first exponent gauged to 0;
  // enumerated in lexicographic order for determinism.
  std::vector<int> e(m, 0);
  family.lifts.reserve(count);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    CurveAutomorphism a;
    a.perm = s.perm;
    a.anticonformal = s.map.anticonformal;
    a.c.resize(m);
    for (int i = 0; i < m; ++i)
      a.c[i] = principal[i] * std::polar(1.0, 2.0 * M_PI * e[i] / curve.k);
    family.lifts.push_back(a.normalized());
    for (int pos = m - 1; pos >= 1; --pos) {
      if (++e[pos] < curve.k) break;
      e[pos] = 0;
    }
  }
  return family;
}

CurveAutomorphism compose_autos(const CurveAutomorphism& a1, const CurveAutomorphism& a2) {
  const std::size_t m = a1.perm.size();
  if (a2.perm.size() != m) throw Error("compose_autos: size mismatch");
  const std::vector<int> inv1 = inverse_perm(a1.perm);
  CurveAutomorphism r;
  r.perm.resize(m);
  r.c.resize(m);
  for (std::size_t i = 0; i < m; ++i) r.perm[i] = a1.perm[a2.perm[i]];
  for (std::size_t i = 0; i < m; ++i) {
    Complex c2 = a2.c[inv1[i]];
    if (a1.anticonformal) c2 = std::conj(c2);
    r.c[i] = a1.c[i] * c2;
  }
  r.anticonformal = a1.anticonformal != a2.anticonformal;
  return r.normalized();
}

CurveAutomorphism auto_power(const CurveAutomorphism& a, int e) {
  if (e < 1) throw Error("auto_power: exponent must be >= 1");
  CurveAutomorphism r = a;
  for (int i = 1; i < e; ++i) r = compose_autos(a, r);
  return r;
}

bool auto_is_identity(const CurveAutomorphism& a, double eps) {
  if (a.anticonformal) return false;
  for (std::size_t i = 0; i < a.perm.size(); ++i)
    if (a.perm[i] != static_cast<int>(i)) return false;
  const CurveAutomorphism n = a.normalized();
  for (const Complex& e : n.c)
    if (std::abs(e - Complex(1.0)) > eps) return false;
  return true;
}

int auto_order(const CurveAutomorphism& a, int cap, double eps) {
  CurveAutomorphism acc = a;
  for (int q = 1; q <= cap; ++q) {
    if (auto_is_identity(acc, eps)) return q;
    acc = compose_autos(a, acc);
  }
  throw NotFiniteOrder("automorphism has no order up to " + std::to_string(cap));
}

bool is_involution(const CurveAutomorphism& a, double eps) {
  return !auto_is_identity(a, eps) && auto_is_identity(compose_autos(a, a), eps);
}

bool is_curve_automorphism(const FermatCurve& curve, const CurveAutomorphism& a, double eps,
                           std::uint64_t seed) {
  const int m = curve.n + 1;
  if (static_cast<int>(a.perm.size()) != m || static_cast<int>(a.c.size()) != m) return false;

  // Rank test: every substituted row must stay inside rowspace(Q).
  CMatrix stacked;
  for (const auto& row : curve.Q) stacked.append_row(row);
  const std::vector<int> inv = inverse_perm(a.perm);
  for (int r = 0; r < curve.n - 1; ++r) {
    std::vector<Complex> v(m, Complex(0.0));
    for (int pos = 0; pos < m; ++pos) {
      const int i = a.perm[pos];
      Complex ck = 1.0;
      for (int e = 0; e < curve.k; ++e) ck *= a.c[i];
      Complex entry = curve.Q[r][i] * ck;
      if (a.anticonformal) entry = std::conj(entry);
      v[pos] = entry;
    }
    stacked.append_row(v);
  }
  if (rank(stacked, eps) != curve.n - 1) return false;

  // Spot check: random fiber points must land back on the curve.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_int_distribution<int> root(0, curve.k - 1);
  const ConeConfiguration cone = cone_points(curve, eps);
  int done = 0;
  for (int attempt = 0; attempt < 1000 && done < 20; ++attempt) {
    SpherePoint z(Complex(coord(rng), coord(rng)));
    bool near_cone = false;
    for (const SpherePoint& c : cone.points)
      if (chordal_distance(z, c) <= 1e-3) near_cone = true;
    if (near_cone) continue;
    std::vector<int> choice(m);
    for (int i = 0; i < m; ++i) choice[i] = root(rng);
    const CurvePoint p = fiber_point(curve, z, choice, eps);
    if (!on_curve(curve, apply_auto(a, p), eps * 100)) return false;
    ++done;
  }
  return done == 20;
}

}  // namespace gfc
