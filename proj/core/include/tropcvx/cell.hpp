#pragma once

// Rational polyhedra in reduced coordinates R^d, d = n - 1 (see
// TropPoint::reduced). A Cell keeps both descriptions:
//   V: conv(vertices) + cone(rays) + span(lineality), canonical and minimal;
//   H: affine equations and facet inequalities, each a homogeneous vector
//      (c, a) read as c + a . x (= or >=) 0.
// The canonical V-description doubles as an identity key, so faces shared by
// several cells of a complex are recognized by string comparison.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropcvx/linalg.hpp"

namespace tropcvx {

class Cell {
 public:
  using Matrix = linalg::Matrix;

  /// Needs at least one vertex. Input generators may be redundant.
  static Cell from_generators(std::size_t ambient_dim, const Matrix& vertices, const Matrix& rays = {},
                              const Matrix& lineality = {});
  static Cell cone(std::size_t ambient_dim, const Matrix& rays, const Matrix& lineality = {});
  static Cell point(const Vec& x);
  /// R^d itself.
  static Cell whole_space(std::size_t ambient_dim);
  /// The polyhedron {x : c + a . x >= 0 for (c, a) in inequalities, = 0 for
  /// equations}; nullopt if empty.
  static std::optional<Cell> from_constraints(std::size_t ambient_dim, const Matrix& inequalities,
                                              const Matrix& equations);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }
  const Matrix& vertices() const { return vertices_; }
  /// Primitive integer directions, reduced modulo the lineality space.
  const Matrix& rays() const { return rays_; }
  /// Reduced row echelon basis.
  const Matrix& lineality() const { return lineality_; }
  const Matrix& inequalities() const { return facets_; }
  const Matrix& equations() const { return equations_; }
  const std::string& key() const { return key_; }

  bool is_cone() const;
  bool is_bounded() const { return rays_.empty() && lineality_.empty(); }

  /// Membership through the H-description.
  bool contains(const Vec& x) const;
  bool relint_contains(const Vec& x) const;
  /// Membership through the V-description (an LP); used to cross-check.
  bool contains_by_generators(const Vec& x) const;
  /// True iff every generator of `other` lies in this cell.
  bool contains_cell(const Cell& other) const;

  /// One cell per facet inequality.
  std::vector<Cell> facets() const;
  /// Basis of the linear space parallel to the affine hull.
  Matrix direction_basis() const;
  Cell recession_cone() const;
  Cell translated(const Vec& t) const;
  /// Cone generated by (this - p); p must lie in the cell.
  Cell cone_at(const Vec& p) const;

  /// Barycenter of the vertices plus the sum of the rays; lies in the
  /// relative interior.
  Vec interior_point() const;
  /// A relative interior point off every hyperplane (c, a) that does not
  /// contain the whole cell.
  Vec generic_point(const Matrix& hyperplanes) const;

  /// Sign pattern of an affine function c + a . x over the cell: +1 if >= 0
  /// everywhere, -1 if <= 0 everywhere (0 when identically zero), 2 if it
  /// takes both signs.
  int sign_on(const Vec& hyperplane) const;
  bool in_hyperplane(const Vec& hyperplane) const { return sign_on(hyperplane) == 0; }

  /// Full-dimensional pieces of the cell cut by every hyperplane in turn.
  /// Throws ResourceLimit once more than `budget` pieces exist.
  std::vector<Cell> refine(const Matrix& hyperplanes, std::size_t budget) const;
  /// Intersection with extra inequalities (c, a); nullopt if empty.
  std::optional<Cell> intersect(const Matrix& inequalities, const Matrix& equations = {}) const;

  friend bool operator==(const Cell& a, const Cell& b) { return a.key_ == b.key_; }

 private:
  Cell() = default;
  // Fills every member from generators of the homogenized cone
  // {t (1, x)} + recession directions (0, r); `minimal` skips one DD pass.
  void build_from_homogeneous(const Matrix& rays, const Matrix& lineality, bool minimal);

  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  Matrix vertices_;
  Matrix rays_;
  Matrix lineality_;
  Matrix facets_;
  Matrix equations_;
  std::string key_;
};

/// (c, a) -> c + a . x
Rational evaluate_affine(const Vec& hyperplane, const Vec& x);

}  // namespace tropcvx
