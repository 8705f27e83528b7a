#pragma once

#include <random>

#include "gfc/sphere.hpp"

namespace gfc::test {

inline Complex random_complex(std::mt19937_64& rng, double box = 2.0) {
  std::uniform_real_distribution<double> d(-box, box);
  return Complex(d(rng), d(rng));
}

inline SpherePoint random_point(std::mt19937_64& rng) {
  // Occasionally near-infinity, to keep the projective paths honest.
  std::uniform_int_distribution<int> pick(0, 9);
  if (pick(rng) == 0) return SpherePoint(Complex(1.0), random_complex(rng, 0.05));
  return SpherePoint(random_complex(rng));
}

inline ExtendedMobius random_mobius(std::mt19937_64& rng, bool anticonformal = false) {
  for (;;) {
    const Complex a = random_complex(rng), b = random_complex(rng);
    const Complex c = random_complex(rng), d = random_complex(rng);
    if (std::abs(a * d - b * c) > 0.1)
      return ExtendedMobius::from_matrix(a, b, c, d, anticonformal);
  }
}

inline Complex omega3() { return std::polar(1.0, 2.0 * M_PI / 3.0); }

}  // namespace gfc::test
