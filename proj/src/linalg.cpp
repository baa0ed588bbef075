#include "e7dirac/linalg.hpp"

#include <stdexcept>

namespace e7dirac::linalg {

Matrix identity(std::size_t n) {
  Matrix m(n, Vector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n, Vector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse: matrix not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, n);
  if (pivots.size() != n) return std::nullopt;
  Matrix out(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  const std::size_t n = m.size();
  Matrix aug(n, Vector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n] = b[i];
  }
  auto pivots = rref(aug, n);
  if (pivots.size() != n) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::vector<Vector> null_space(const Matrix& m) {
  if (m.empty()) return {};
  const std::size_t ncols = m[0].size();
  Matrix r = m;
  auto pivots = rref(r, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector x(ncols, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  Matrix r = m;
  return rref(r, m[0].size()).size();
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Matrix out(n, Vector(p, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Vector multiply(const Matrix& a, const Vector& x) {
  Vector out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  return out;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), Vector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace e7dirac::linalg
