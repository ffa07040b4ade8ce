#pragma once

#include <cstddef>

#include "tropcvx/linalg.hpp"

namespace tropcvx::lattice {

/// Basis of the saturated lattice V cap Z^d, where V is the row space of
/// `span`. Computed as the integer kernel of an integral basis of the
/// orthogonal complement, by unimodular column reduction.
linalg::Matrix saturated_basis(const linalg::Matrix& span, std::size_t d);

/// Integers m_i with sum m_i a_i = gcd(a_i) (> 0 unless all a_i vanish).
std::vector<Integer> bezout(const std::vector<Integer>& a);

}  // namespace tropcvx::lattice
