#pragma once

// Weighted rational polyhedral complexes in the tropical torus. Cells live in
// reduced coordinates (first coordinate dropped), so a complex on n elements
// has ambient dimension n - 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tropcvx/cell.hpp"
#include "tropcvx/element_set.hpp"
#include "tropcvx/matroid.hpp"
#include "tropcvx/trop_point.hpp"

namespace tropcvx {

using Weight = std::int64_t;

/// Default cap on the number of pieces any refinement may create.
inline constexpr std::size_t kDefaultBudget = 200000;

class WeightedComplex {
 public:
  /// Builds the face poset of the given maximal cells. Every cell must have
  /// ambient dimension n - 1 and a positive weight; no listed cell may be a
  /// face of another. With `check_intersections`, every pair of maximal cells
  /// must meet in a common face.
  static WeightedComplex from_maximal_cells(std::size_t n, const std::vector<Cell>& cells,
                                            const std::vector<Weight>& weights, bool check_intersections = true);

  std::size_t n() const { return n_; }
  std::size_t ambient_dim() const { return n_ - 1; }
  /// Largest dimension of a maximal cell.
  std::size_t dim() const { return dim_; }
  bool is_pure() const;
  bool is_fan() const;

  std::size_t size() const { return cells_.size(); }
  const Cell& cell(std::size_t i) const { return cells_[i]; }
  const std::vector<Cell>& cells() const { return cells_; }
  /// Indices of the maximal cells, in input order.
  const std::vector<std::size_t>& maximal() const { return maximal_; }
  bool is_maximal(std::size_t i) const { return weights_[i] > 0; }
  /// Weight of a maximal cell, 0 for other cells.
  Weight weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::size_t>& facets(std::size_t i) const { return facets_[i]; }
  /// Cells having cell i as a facet.
  const std::vector<std::size_t>& cofacets(std::size_t i) const { return cofacets_[i]; }
  /// Cells without proper faces (the vertices of a pointed complex).
  std::vector<std::size_t> minimal_cells() const;
  std::optional<std::size_t> find(const Cell& c) const;

  std::vector<Cell> maximal_cells() const;
  std::vector<Weight> maximal_weights() const;
  /// Same cells, every weight multiplied by k (k >= 1).
  WeightedComplex scaled(Weight k) const;
  /// Same cells, every weight divided by d (which must divide all of them).
  WeightedComplex divided(Weight d) const;
  WeightedComplex translated(const TropPoint& t) const;

 private:
  WeightedComplex() = default;
  std::size_t add_cell(Cell c);

  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<Cell> cells_;
  std::vector<Weight> weights_;
  std::vector<std::size_t> maximal_;
  std::vector<std::vector<std::size_t>> facets_;
  std::vector<std::vector<std::size_t>> cofacets_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// All nonempty faces of a cell (the cell included), each listed once.
std::vector<Cell> all_faces(const Cell& c);

/// First pair (i, j) of cells whose intersection is not a common face.
std::optional<std::pair<std::size_t, std::size_t>> find_bad_intersection(const std::vector<Cell>& cells);

/// Reduced coordinates of v_F = -e_F.
Vec bergman_ray(std::size_t n, ElementSet f);
/// The hyperplanes x_i = x_j in reduced coordinates, as (0, a).
linalg::Matrix braid_hyperplanes(std::size_t n);

/// The minimal cell containing x, if any.
std::optional<std::size_t> point_in_support(const WeightedComplex& x, const TropPoint& p);

/// Primitive normal vector u_{sigma/tau}; throws InvalidInput unless tau is a
/// facet of sigma.
Vec primitive_normal(const Cell& sigma, const Cell& tau);

struct BalanceReport {
  bool balanced = true;
  /// Index of a codimension-one cell where balancing fails.
  std::optional<std::size_t> witness;
  /// The weighted sum of primitive normals at the witness.
  Vec residual;
};
/// Throws InvalidInput for a non-pure complex.
BalanceReport is_balanced(const WeightedComplex& x);

/// Every maximal cell refined by the hyperplanes, weights inherited.
WeightedComplex refine(const WeightedComplex& x, const linalg::Matrix& hyperplanes,
                       std::size_t budget = kDefaultBudget);

/// Fan of recession cones with weights summed over cells sharing a cone,
/// refined when the cones do not already form a fan.
WeightedComplex recession_fan(const WeightedComplex& x, std::size_t budget = kDefaultBudget);

/// Fan of cones R>=0 (sigma - p) over maximal cells containing p, weights
/// inherited; refined along the braid arrangement when p is not a vertex.
/// Throws InvalidInput if p is outside the support.
WeightedComplex star_fan(const WeightedComplex& x, const TropPoint& p, std::size_t budget = kDefaultBudget);

/// The cone spanned by v_{F_1}, ..., v_{F_{d-1}} of a chain ending at E.
Cell chain_cone(std::size_t n, const Chain& chain);
/// Fan of chain cones, weight 1 on the maximal ones.
WeightedComplex chain_fan(const ChainFamily& f);

struct ChainCone {
  /// F_1 < ... < F_s = E.
  Chain chain;
  /// Positive coefficients with x = sum lambda_i v_{F_i}, i < s.
  std::vector<Rational> coefficients;
};
/// The smallest cone of the permutohedral fan containing x.
ChainCone chn_cell_of(const TropPoint& x);

struct SegmentCoverage {
  bool covered = true;
  /// First uncovered point found, with its linear piece and parameter.
  std::optional<TropPoint> gap;
  std::size_t piece = 0;
  Rational parameter;
};
/// Exact test whether the tropical segment from x to y lies in the support.
SegmentCoverage segment_in_support(const WeightedComplex& x, const TropPoint& a, const TropPoint& b);

}  // namespace tropcvx
