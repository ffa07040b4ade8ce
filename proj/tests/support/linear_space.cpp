#include "support/linear_space.hpp"

#include <unordered_set>

namespace tropcvx::testing {

WeightedComplex linear_space_complex(const ValuatedMatroid& v, std::size_t budget) {
  const std::size_t n = v.size();
  const std::vector<Cell> chambers = Cell::whole_space(n - 1).refine(circuit_hyperplanes(v), budget);
  std::vector<Cell> faces;
  std::unordered_set<std::string> seen;
  for (const auto& c : chambers) {
    for (auto& f : all_faces(c)) {
      if (seen.insert(f.key()).second) faces.push_back(std::move(f));
    }
  }
  std::vector<Cell> members;
  for (auto& f : faces) {
    if (member(v, TropPoint::from_reduced(f.interior_point()))) members.push_back(std::move(f));
  }
  std::vector<Cell> maximal;
  for (const auto& f : members) {
    bool covered = false;
    for (const auto& g : members) {
      if (g.dim() > f.dim() && g.contains_cell(f)) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.push_back(f);
  }
  return WeightedComplex::from_maximal_cells(n, maximal, std::vector<Weight>(maximal.size(), 1), false);
}

ChainFamily flat_family(const Matroid& m) {
  std::vector<ElementSet> sets;
  for (auto f : m.flats()) {
    if (!f.empty()) sets.push_back(f);
  }
  return ChainFamily(m.size(), sets);
}

WeightedComplex bergman_fan(const Matroid& m) { return chain_fan(flat_family(m)); }

}  // namespace tropcvx::testing
