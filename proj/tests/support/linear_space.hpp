#pragma once

// Test oracle: the polyhedral structure of B(M, w) read off the arrangement of
// circuit hyperplanes. Every closed face of the arrangement is tested at one
// relative interior point; the maximal faces that pass form the complex.

#include "tropcvx/complex.hpp"
#include "tropcvx/valuated.hpp"

namespace tropcvx::testing {

WeightedComplex linear_space_complex(const ValuatedMatroid& v, std::size_t budget = kDefaultBudget);

/// B(M) as the fan of chains of flats.
WeightedComplex bergman_fan(const Matroid& m);

/// The matroid's flats without the empty set, as a chain family.
ChainFamily flat_family(const Matroid& m);

}  // namespace tropcvx::testing
