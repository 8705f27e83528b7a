#pragma once

#include <vector>

#include "gfc/sphere.hpp"

namespace gfc {

/// Dense complex matrix, row-major. Sized for the tiny systems that show up
/// here (at most ~20 x 10); robustness matters, speed does not.
struct CMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> a;

  CMatrix() = default;
  CMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Complex& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  Complex at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  double max_modulus() const;
  void append_row(const std::vector<Complex>& row);
};

/// Numerical rank by fully pivoted elimination; pivots below
/// tol * (initial max modulus) count as zero.
int rank(CMatrix m, double tol);

struct NullspaceResult {
  int rank = 0;
  std::vector<std::vector<Complex>> basis;  // one vector per free column
};

/// Basis of the right nullspace at the same pivot threshold as rank().
NullspaceResult nullspace(CMatrix m, double tol);

}  // namespace gfc
