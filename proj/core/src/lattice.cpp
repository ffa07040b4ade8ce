#include "tropcvx/lattice.hpp"

namespace tropcvx::lattice {

namespace {

// g = a x + b y with g = gcd(a, b) >= 0.
void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

std::vector<Integer> bezout(const std::vector<Integer>& a) {
  std::vector<Integer> m(a.size(), Integer(0));
  if (a.empty()) return m;
  Integer g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer ng, x, y;
    ext_gcd(g, a[i], ng, x, y);
    // new combination = x * (old combination) + y * e_i
    for (std::size_t k = 0; k < i; ++k) m[k] *= x;
    m[i] = y;
    g = ng;
  }
  return m;
}

linalg::Matrix saturated_basis(const linalg::Matrix& span, std::size_t d) {
  linalg::Matrix complement = linalg::nullspace(span, d);
  std::vector<std::vector<Integer>> a;
  for (const auto& row : complement) {
    const Vec p = primitive_integer(row);
    std::vector<Integer> ints;
    for (const auto& x : p) ints.push_back(x.get_num());
    a.push_back(std::move(ints));
  }

  // u starts as the identity; columns of a*u are zeroed row by row.
  std::vector<std::vector<Integer>> u(d, std::vector<Integer>(d, Integer(0)));
  for (std::size_t i = 0; i < d; ++i) u[i][i] = 1;
  auto combine = [&](std::size_t j, std::size_t k, const Integer& p, const Integer& q, const Integer& r,
                     const Integer& s) {
    // col_j <- p col_j + q col_k ; col_k <- r col_j + s col_k
    for (auto& row : a) {
      const Integer cj = row[j], ck = row[k];
      row[j] = p * cj + q * ck;
      row[k] = r * cj + s * ck;
    }
    for (auto& row : u) {
      const Integer cj = row[j], ck = row[k];
      row[j] = p * cj + q * ck;
      row[k] = r * cj + s * ck;
    }
  };

  std::size_t col = 0;
  for (std::size_t i = 0; i < a.size() && col < d; ++i) {
    for (std::size_t k = col + 1; k < d; ++k) {
      const Integer x0 = a[i][col], y0 = a[i][k];
      if (y0 == 0) continue;
      Integer g, x, y;
      ext_gcd(x0, y0, g, x, y);
      combine(col, k, x, y, Integer(-y0 / g), Integer(x0 / g));
    }
    if (a[i][col] != 0) ++col;
  }

  linalg::Matrix basis;
  for (std::size_t k = col; k < d; ++k) {
    Vec v(d);
    for (std::size_t r = 0; r < d; ++r) v[r] = u[r][k];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tropcvx::lattice
