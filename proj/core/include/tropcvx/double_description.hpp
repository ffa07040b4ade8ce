#pragma once

// Exact double description for polyhedral cones in R^dim. One primitive,
// generators_from_constraints, does both conversions: the facets of a cone
// are the extreme rays of its dual.

#include <cstddef>

#include "tropcvx/linalg.hpp"

namespace tropcvx::dd {

struct ConeGenerators {
  linalg::Matrix rays;       // extreme rays modulo the lineality space
  linalg::Matrix lineality;  // basis of the lineality space
};

struct ConeConstraints {
  linalg::Matrix facets;     // irredundant: a . x >= 0
  linalg::Matrix equations;  // basis of the orthogonal complement of the span
};

/// Minimal generators of {x : a . x >= 0 for a in inequalities, e . x = 0 for
/// e in equalities}. Rays are scaled to primitive integer vectors.
ConeGenerators generators_from_constraints(std::size_t dim, const linalg::Matrix& inequalities,
                                           const linalg::Matrix& equalities);

/// Irredundant description of cone(rays) + span(lineality).
ConeConstraints constraints_from_generators(std::size_t dim, const linalg::Matrix& rays,
                                            const linalg::Matrix& lineality);

}  // namespace tropcvx::dd
