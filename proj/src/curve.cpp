#include "gfc/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gfc {

FermatCurve build_curve(int k, std::vector<Complex> lambdas, double eps) {
  if (k < 2) throw Error("build_curve: k must be >= 2");
  FermatCurve curve;
  curve.k = k;
  curve.n = static_cast<int>(lambdas.size()) + 2;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (std::abs(lambdas[i]) <= eps || std::abs(lambdas[i] - Complex(1.0)) <= eps)
      throw InvalidLambda("lambda_" + std::to_string(i + 1) + " lies in {0, 1}");
    for (std::size_t j = i + 1; j < lambdas.size(); ++j)
      if (std::abs(lambdas[i] - lambdas[j]) <= eps)
        throw InvalidLambda("lambda_" + std::to_string(i + 1) + " and lambda_" +
                            std::to_string(j + 1) + " coincide");
  }
  curve.lambdas = std::move(lambdas);
  const int n = curve.n;
  curve.Q.assign(n - 1, std::vector<Complex>(n + 1, Complex(0.0)));
  curve.Q[0][0] = curve.Q[0][1] = curve.Q[0][2] = 1.0;
  for (int j = 1; j <= n - 2; ++j) {
    curve.Q[j][0] = curve.lambdas[j - 1];
    curve.Q[j][1] = 1.0;
    curve.Q[j][j + 2] = 1.0;
  }
  curve.hyperbolic = (n - 1) * (k - 1) > 2;
  return curve;
}

std::int64_t checked_power(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i)
    if (__builtin_mul_overflow(r, base, &r)) throw Overflow("power exceeds the 64-bit range");
  return r;
}

std::int64_t genus(std::int64_t k, std::int64_t n) {
  if (k < 2 || n < 2) throw Error("genus: k and n must be >= 2");
  const std::int64_t p = checked_power(k, n - 1);
  const std::int64_t m = (n - 1) * (k - 1) - 2;
  std::int64_t prod;
  if (__builtin_mul_overflow(p, m, &prod)) throw Overflow("genus exceeds the 64-bit range");
  return 1 + prod / 2;  // p * m is always even
}

CurvePoint CurvePoint::canonical() const {
  std::size_t j = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::abs(x[i]) > std::abs(x[j])) j = i;
  if (x.empty() || std::abs(x[j]) == 0.0) throw Error("CurvePoint: zero vector");
  CurvePoint p;
  p.x.reserve(x.size());
  const Complex scale = x[j];
  for (const Complex& e : x) p.x.push_back(e / scale);
  return p;
}

CurveAutomorphism CurveAutomorphism::identity(int size) {
  CurveAutomorphism a;
  a.perm.resize(size);
  for (int i = 0; i < size; ++i) a.perm[i] = i;
  a.c.assign(size, Complex(1.0));
  return a;
}

CurveAutomorphism CurveAutomorphism::normalized() const {
  CurveAutomorphism a = *this;
  const Complex c0 = a.c.at(0);
  if (std::abs(c0) == 0.0) throw Error("CurveAutomorphism: zero constant");
  for (Complex& e : a.c) e /= c0;
  return a;
}

CurvePoint apply_auto(const CurveAutomorphism& a, const CurvePoint& p) {
  const std::size_t m = a.perm.size();
  if (p.x.size() != m) throw Error("apply_auto: dimension mismatch");
  std::vector<int> inv(m);
  for (std::size_t i = 0; i < m; ++i) inv[a.perm[i]] = static_cast<int>(i);
  CurvePoint q;
  q.x.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Complex src = p.x[inv[i]];
    if (a.anticonformal) src = std::conj(src);
    q.x[i] = a.c[i] * src;
  }
  return q.canonical();
}

bool autos_equal(const CurveAutomorphism& a, const CurveAutomorphism& b, double eps) {
  if (a.anticonformal != b.anticonformal || a.perm != b.perm) return false;
  const CurveAutomorphism an = a.normalized(), bn = b.normalized();
  for (std::size_t i = 0; i < an.c.size(); ++i)
    if (std::abs(an.c[i] - bn.c[i]) > eps * (1.0 + std::abs(bn.c[i]))) return false;
  return true;
}

std::vector<CurveAutomorphism> h_generators(const FermatCurve& curve) {
  const int m = curve.n + 1;
  const Complex zeta = std::polar(1.0, 2.0 * M_PI / curve.k);
  std::vector<CurveAutomorphism> gens;
  gens.reserve(curve.n);
  for (int j = 0; j < curve.n; ++j) {
    CurveAutomorphism a = CurveAutomorphism::identity(m);
    a.c[j] = zeta;
    gens.push_back(a.normalized());
  }
  return gens;
}

SpherePoint quotient_map(const FermatCurve& curve, const CurvePoint& p, double eps) {
  if (!on_curve(curve, p, eps)) throw NotOnCurve("quotient_map input fails the residual test");
  const CurvePoint q = p.canonical();
  const Complex x1 = q.x[0], x2 = q.x[1];
  // -(x2/x1)^k projectively: [-x2^k : x1^k].
  Complex num = -1.0, den = 1.0;
  for (int i = 0; i < curve.k; ++i) {
    num *= x2;
    den *= x1;
  }
  if (std::abs(num) == 0.0 && std::abs(den) == 0.0) throw Error("quotient_map: zero pair");
  return SpherePoint(num, den);
}

CurvePoint fiber_point(const FermatCurve& curve, const SpherePoint& z,
                       const std::vector<int>& root_choice, double eps) {
  const ConeConfiguration cone = cone_points(curve, eps);
  for (int i = 0; i < cone.size(); ++i)
    if (chordal_distance(z, cone.points[i]) <= eps)
      throw RamifiedFiber("z is the cone point with index " + std::to_string(i + 1));
  const int m = curve.n + 1;
  if (static_cast<int>(root_choice.size()) != m)
    throw Error("fiber_point: root_choice must list n + 1 entries");
  const Complex zv = z.value();
  std::vector<Complex> powers(m);
  powers[0] = 1.0;
  powers[1] = -zv;
  powers[2] = zv - 1.0;
  for (int j = 0; j < curve.n - 2; ++j) powers[j + 3] = zv - curve.lambdas[j];
  CurvePoint p;
  p.x.resize(m);
  for (int i = 0; i < m; ++i) {
    const Complex w = powers[i];
    const Complex principal = std::polar(std::pow(std::abs(w), 1.0 / curve.k),
                                         std::arg(w) / curve.k);
    const int e = ((root_choice[i] % curve.k) + curve.k) % curve.k;
    p.x[i] = principal * std::polar(1.0, 2.0 * M_PI * e / curve.k);
  }
  return p.canonical();
}

bool on_curve(const FermatCurve& curve, const CurvePoint& p, double eps) {
  if (static_cast<int>(p.x.size()) != curve.n + 1) return false;
  const CurvePoint q = p.canonical();
  std::vector<Complex> pk(q.x.size());
  for (std::size_t i = 0; i < q.x.size(); ++i) {
    Complex w = 1.0;
    for (int e = 0; e < curve.k; ++e) w *= q.x[i];
    pk[i] = w;
  }
  for (const auto& row : curve.Q) {
    Complex r = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i) r += row[i] * pk[i];
    if (std::abs(r) > eps) return false;
  }
  return true;
}

ConeConfiguration cone_points(const FermatCurve& curve, double eps) {
  std::vector<SpherePoint> pts;
  pts.reserve(curve.n + 1);
  pts.push_back(SpherePoint::infinity());
  pts.push_back(SpherePoint(Complex(0.0)));
  pts.push_back(SpherePoint(Complex(1.0)));
  for (const Complex& l : curve.lambdas) pts.push_back(SpherePoint(l));
  return ConeConfiguration(std::move(pts), eps);
}

}  // namespace gfc
