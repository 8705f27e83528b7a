#pragma once

#include <vector>

#include "gfc/sphere.hpp"

namespace gfc {

/// Ordered cone-point configuration on the sphere. Ordering is significant:
/// normalization sends points 1, 2, 3 (1-based) to infinity, 0, 1.
struct ConeConfiguration {
  std::vector<SpherePoint> points;

  ConeConfiguration(std::vector<SpherePoint> pts, double eps = kDefaultEpsilon);

  int size() const { return static_cast<int>(points.size()); }  // n + 1
  int n() const { return size() - 1; }
};

/// A Mobius (or conjugate-Mobius) map permuting the configuration, plus the
/// induced permutation: perm[i] = j iff the map sends point i to point j
/// (0-based internally).
struct ConfigSymmetry {
  ExtendedMobius map;
  std::vector<int> perm;
};

enum class Orientation { Conformal, Anticonformal, Both };

/// Every extended Mobius map preserving the point set, found by the ordered
/// triple sweep, deduplicated by (perm, orientation) and sorted by
/// (orientation, perm). Complete: a Mobius map is pinned by three images.
std::vector<ConfigSymmetry> symmetries(const ConeConfiguration& cfg, Orientation orientation,
                                       double eps = kDefaultEpsilon);

struct Normalization {
  std::vector<Complex> lambdas;  // images of points 4..n+1
  ExtendedMobius used;           // conformal, sends points 1,2,3 -> inf,0,1
};

/// Throws DegenerateConfiguration when the images collide with {0, 1, inf}
/// or one another within eps.
Normalization normalize(const ConeConfiguration& cfg, double eps = kDefaultEpsilon);

/// Orbit data of one anticonformal symmetry: its order 2M, the rotation-
/// reflection parameter N, and the counts A, B, C of orbits per the length
/// taxonomy; n + 1 = 2NA + NB + 2C always holds on success.
struct OrbitProfile {
  int order2M = 0;
  int N = 0;
  int A = 0;
  int B = 0;
  int C = 0;
};

OrbitProfile orbit_profile(const ConfigSymmetry& s, const ConeConfiguration& cfg,
                           int order_cap = 0, double eps = kDefaultEpsilon);

struct OrbitTypeSolution {
  int N = 0;
  int A = 0;
  int B = 0;
  int C = 0;
  friend auto operator<=>(const OrbitTypeSolution&, const OrbitTypeSolution&) = default;
};

/// All (N, A, B, C) with 1 <= N <= maxN solving n + 1 = 2NA + NB + 2C under
/// the per-N constraints (N=1: C=0; N=2: A=C=0; N even >= 4: A=0; C <= 1),
/// sorted by (N, A, B, C).
std::vector<OrbitTypeSolution> orbit_type_solutions(int n, int maxN);

}  // namespace gfc
