#include "gfc/config.hpp"

#include <algorithm>
#include <optional>

namespace gfc {

ConeConfiguration::ConeConfiguration(std::vector<SpherePoint> pts, double eps) : points(std::move(pts)) {
  if (points.size() < 3)
    throw DegenerateConfiguration("a configuration needs at least 3 points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (chordal_distance(points[i], points[j]) <= eps)
        throw DegenerateConfiguration("points " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " coincide within tolerance");
}

namespace {

// Permutation induced by `map` on the configuration, if it permutes the set.
std::optional<std::vector<int>> induced_permutation(const ExtendedMobius& map,
                                                    const ConeConfiguration& cfg, double eps) {
  const int m = cfg.size();
  std::vector<int> perm(m, -1);
  std::vector<bool> hit(m, false);
  for (int i = 0; i < m; ++i) {
    const SpherePoint image = apply(map, cfg.points[i]);
    int match = -1;
    for (int j = 0; j < m; ++j)
      if (chordal_distance(image, cfg.points[j]) <= eps) {
        match = j;
        break;
      }
    if (match < 0 || hit[match]) return std::nullopt;
    perm[i] = match;
    hit[match] = true;
  }
  return perm;
}

void sweep(const ConeConfiguration& cfg, bool anticonformal, double eps,
           std::vector<ConfigSymmetry>* out) {
  const int m = cfg.size();
  SpherePoint b1 = cfg.points[0], b2 = cfg.points[1], b3 = cfg.points[2];
  if (anticonformal) {
    b1 = SpherePoint(std::conj(b1.u), std::conj(b1.v));
    b2 = SpherePoint(std::conj(b2.u), std::conj(b2.v));
    b3 = SpherePoint(std::conj(b3.u), std::conj(b3.v));
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        if (i == j || i == k || j == k) continue;
        ExtendedMobius cand =
            mobius_through(b1, b2, b3, cfg.points[i], cfg.points[j], cfg.points[k], eps);
        cand.anticonformal = anticonformal;
        auto perm = induced_permutation(cand, cfg, eps);
        if (!perm) continue;
        const bool seen = std::any_of(out->begin(), out->end(), [&](const ConfigSymmetry& s) {
          return s.map.anticonformal == anticonformal && s.perm == *perm;
        });
        if (!seen) out->push_back(ConfigSymmetry{cand.normalized(), std::move(*perm)});
      }
}

}  // namespace

std::vector<ConfigSymmetry> symmetries(const ConeConfiguration& cfg, Orientation orientation,
                                       double eps) {
  std::vector<ConfigSymmetry> out;
  if (orientation != Orientation::Anticonformal) sweep(cfg, false, eps, &out);
  if (orientation != Orientation::Conformal) sweep(cfg, true, eps, &out);
  std::sort(out.begin(), out.end(), [](const ConfigSymmetry& a, const ConfigSymmetry& b) {
    if (a.map.anticonformal != b.map.anticonformal) return !a.map.anticonformal;
    return a.perm < b.perm;
  });
  return out;
}

Normalization normalize(const ConeConfiguration& cfg, double eps) {
  Normalization result;
  result.used = mobius_to_standard(cfg.points[0], cfg.points[1], cfg.points[2], eps);
  const SpherePoint special[3] = {SpherePoint::infinity(), SpherePoint(Complex(0.0)),
                                  SpherePoint(Complex(1.0))};
  std::vector<SpherePoint> images;
  for (int i = 3; i < cfg.size(); ++i) {
    const SpherePoint z = apply(result.used, cfg.points[i]);
    for (const SpherePoint& s : special)
      if (chordal_distance(z, s) <= eps)
        throw DegenerateConfiguration("image of point " + std::to_string(i + 1) +
                                      " collides with {inf, 0, 1}");
    for (std::size_t j = 0; j < images.size(); ++j)
      if (chordal_distance(z, images[j]) <= eps)
        throw DegenerateConfiguration("images of points " + std::to_string(j + 4) + " and " +
                                      std::to_string(i + 1) + " collide");
    images.push_back(z);
    result.lambdas.push_back(z.value());
  }
  return result;
}

namespace {

std::vector<int> cycle_lengths(const std::vector<int>& perm) {
  std::vector<int> lengths;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

}  // namespace

OrbitProfile orbit_profile(const ConfigSymmetry& s, const ConeConfiguration& cfg, int order_cap,
                           double eps) {
  if (!s.map.anticonformal)
    throw NotAnticonformal("orbit_profile applies to anticonformal symmetries");
  const int cap = order_cap > 0 ? order_cap : default_order_cap(cfg.size());
  OrbitProfile p;
  p.order2M = order(s.map, cap, eps);
  p.N = anticonformal_normal_form(s.map, cap, eps).n;

  auto bad = [&](int len) {
    throw InconsistentOrbitLengths("orbit of length " + std::to_string(len) +
                                   " is outside the taxonomy for N = " + std::to_string(p.N));
  };
  for (const int len : cycle_lengths(s.perm)) {
    if (p.N == 1) {
      if (len == 1) ++p.B;
      else if (len == 2) ++p.A;
      else bad(len);
    } else if (p.N == 2) {
      if (len == 2) ++p.B;
      else bad(len);
    } else if (p.N % 2 == 1) {
      if (len == 2) ++p.C;
      else if (len == p.N) ++p.B;
      else if (len == 2 * p.N) ++p.A;
      else bad(len);
    } else {
      if (len == 2) ++p.C;
      else if (len == p.N) ++p.B;
      else bad(len);
    }
  }
  if (p.C > 1)
    throw InconsistentOrbitLengths("more than one orbit of length 2 for N = " +
                                   std::to_string(p.N));
  if (cfg.size() != 2 * p.N * p.A + p.N * p.B + 2 * p.C)
    throw InconsistentOrbitLengths("orbit counts do not account for every point");
  return p;
}

std::vector<OrbitTypeSolution> orbit_type_solutions(int n, int maxN) {
  std::vector<OrbitTypeSolution> out;
  const int total = n + 1;
  for (int N = 1; N <= maxN; ++N) {
    const int maxC = (N == 1 || N == 2) ? 0 : 1;
    const int maxA = (N == 2 || (N >= 4 && N % 2 == 0)) ? 0 : total / (2 * N);
    for (int C = 0; C <= maxC; ++C)
      for (int A = 0; A <= maxA; ++A) {
        const int rem = total - 2 * N * A - 2 * C;
        if (rem < 0 || rem % N != 0) continue;
        out.push_back(OrbitTypeSolution{N, A, rem / N, C});
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gfc
