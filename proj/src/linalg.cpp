#include "gfc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gfc {

double CMatrix::max_modulus() const {
  double best = 0.0;
  for (const Complex& e : a) best = std::max(best, std::abs(e));
  return best;
}

void CMatrix::append_row(const std::vector<Complex>& row) {
  if (cols == 0) cols = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols) throw Error("append_row: width mismatch");
  a.insert(a.end(), row.begin(), row.end());
  ++rows;
}

namespace {

struct Elimination {
  CMatrix m;                    // upper-triangular in the permuted columns
  std::vector<int> col_perm;    // col_perm[k] = original column of step k
  int rank = 0;
};

// Gaussian elimination with full pivoting; column order is recorded so the
// nullspace can be reassembled afterwards.
Elimination eliminate(CMatrix m, double tol) {
  Elimination e;
  e.col_perm.resize(m.cols);
  std::iota(e.col_perm.begin(), e.col_perm.end(), 0);
  const double threshold = tol * std::max(m.max_modulus(), 1e-300);
  const int steps = std::min(m.rows, m.cols);
  int k = 0;
  for (; k < steps; ++k) {
    int pr = -1, pc = -1;
    double best = threshold;
    for (int r = k; r < m.rows; ++r)
      for (int c = k; c < m.cols; ++c)
        if (std::abs(m.at(r, c)) > best) {
          best = std::abs(m.at(r, c));
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    if (pr != k)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(k, c), m.at(pr, c));
    if (pc != k) {
      for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, k), m.at(r, pc));
      std::swap(e.col_perm[k], e.col_perm[pc]);
    }
    for (int r = k + 1; r < m.rows; ++r) {
      const Complex f = m.at(r, k) / m.at(k, k);
      m.at(r, k) = 0.0;
      for (int c = k + 1; c < m.cols; ++c) m.at(r, c) -= f * m.at(k, c);
    }
  }
  e.rank = k;
  e.m = std::move(m);
  return e;
}

}  // namespace

int rank(CMatrix m, double tol) { return eliminate(std::move(m), tol).rank; }

NullspaceResult nullspace(CMatrix m, double tol) {
  const int cols = m.cols;
  Elimination e = eliminate(std::move(m), tol);
  NullspaceResult out;
  out.rank = e.rank;
  for (int free_col = e.rank; free_col < cols; ++free_col) {
    std::vector<Complex> y(cols, Complex(0.0));
    y[free_col] = 1.0;
    for (int r = e.rank - 1; r >= 0; --r) {
      Complex s = e.m.at(r, free_col);
      for (int c = r + 1; c < e.rank; ++c) s += e.m.at(r, c) * y[c];
      y[r] = -s / e.m.at(r, r);
    }
    std::vector<Complex> x(cols, Complex(0.0));
    for (int c = 0; c < cols; ++c) x[e.col_perm[c]] = y[c];
    out.basis.push_back(std::move(x));
  }
  return out;
}

}  // namespace gfc
