#include "finstoch/linalg.hpp"

#include <stdexcept>

namespace finstoch {

namespace {

// Forward elimination with exact arithmetic; returns the row permutation's
// pivot columns. `rhs` may be empty (rank computation only).
std::size_t eliminate(Matrix& a, Matrix* rhs) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && a[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[pivot_row]);
    if (rhs) std::swap((*rhs)[sel], (*rhs)[pivot_row]);
    const Rational pivot = a[pivot_row][col];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][col].is_zero()) continue;
      Rational factor = a[r][col] / pivot;
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[pivot_row][c];
      if (rhs)
        for (std::size_t c = 0; c < (*rhs)[r].size(); ++c)
          (*rhs)[r][c] -= factor * (*rhs)[pivot_row][c];
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

Matrix solve_linear_multi(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  if (n == 0 || a[0].size() != n) throw std::invalid_argument("solve_linear: matrix must be square");
  if (b.size() != n) throw std::invalid_argument("solve_linear: rhs row count mismatch");
  Matrix m = a;
  Matrix rhs = b;
  std::size_t rk = eliminate(m, &rhs);
  if (rk != n) throw std::logic_error("solve_linear: singular system");
  // m is now diagonal up to row order; pivots sit on the diagonal because
  // every column acquired a pivot.
  Matrix x(n, std::vector<Rational>(b[0].size(), Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t col = 0;
    while (col < n && m[r][col].is_zero()) ++col;
    for (std::size_t c = 0; c < rhs[r].size(); ++c) x[col][c] = rhs[r][c] / m[r][col];
  }
  return x;
}

std::vector<Rational> solve_linear(Matrix a, std::vector<Rational> b) {
  Matrix rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = {b[i]};
  Matrix x = solve_linear_multi(a, rhs);
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i][0];
  return out;
}

std::size_t rank(Matrix a) { return eliminate(a, nullptr); }

}  // namespace finstoch
