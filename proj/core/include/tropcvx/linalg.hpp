#pragma once

// Small dense linear algebra over Q. Matrices are row lists; the sizes met in
// practice are a handful of rows by at most a dozen columns.

#include <cstddef>
#include <optional>
#include <vector>

#include "tropcvx/rational.hpp"

namespace tropcvx::linalg {

using Matrix = std::vector<Vec>;

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
/// a + s * b
Vec axpy(const Vec& a, const Rational& s, const Vec& b);
Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

/// Reduced row echelon form. `pivots[k]` is the pivot column of row k.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
  /// Subtracts the combination of rows that zeroes every pivot column of v.
  /// The result is zero iff v lies in the row space; for vectors in a fixed
  /// coset it is a canonical representative.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
};

Echelon echelon(const Matrix& rows, std::size_t ncols);
std::size_t rank(const Matrix& rows, std::size_t ncols);

/// Basis of {x : row . x = 0 for all rows}, one vector per free column.
Matrix nullspace(const Matrix& rows, std::size_t ncols);

/// Coefficients c with sum_k c_k basis[k] = v, if v is in the span. The basis
/// must be linearly independent.
std::optional<Vec> coordinates(const Matrix& basis, const Vec& v);

}  // namespace tropcvx::linalg
