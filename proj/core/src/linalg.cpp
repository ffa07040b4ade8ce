#include "tropcvx/linalg.hpp"

#include <cassert>

namespace tropcvx::linalg {

Rational dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Vec axpy(const Vec& a, const Rational& s, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a);
  if (sgn(s) == 0) return r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(b[i]) != 0) r[i] += s * b[i];
  }
  return r;
}

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zeros(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vec Echelon::reduce(const Vec& v) const {
  Vec r = v;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Rational c = r[pivots[k]];
    if (sgn(c) != 0) r = axpy(r, -c, rows[k]);
  }
  return r;
}

Echelon echelon(const Matrix& input, std::size_t ncols) {
  Matrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    m[row] = scale(m[row], inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != row && sgn(m[r][col]) != 0) m[r] = axpy(m[r], -m[r][col], m[row]);
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& rows, std::size_t ncols) { return echelon(rows, ncols).rank(); }

Matrix nullspace(const Matrix& rows, std::size_t ncols) {
  const Echelon e = echelon(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zeros(ncols);
    v[free] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivots[k]] = -e.rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> coordinates(const Matrix& basis, const Vec& v) {
  // Solve sum c_k b_k = v via the transposed system augmented with v.
  const std::size_t n = v.size();
  const std::size_t k = basis.size();
  Matrix aug(n, Vec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = basis[j][i];
    aug[i][k] = v[i];
  }
  const Echelon e = echelon(aug, k + 1);
  Vec c = zeros(k);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == k) return std::nullopt;
    c[e.pivots[r]] = e.rows[r][k];
  }
  return c;
}

}  // namespace tropcvx::linalg
