#include "tropcvx/matroid.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace tropcvx {

std::string ExchangeViolation::describe() const {
  return "exchange fails for B1=" + b1.to_string() + ", B2=" + b2.to_string() + ", u=" + std::to_string(u + 1);
}

std::optional<ExchangeViolation> find_exchange_violation(std::span<const ElementSet> bases) {
  std::unordered_set<std::uint32_t> lookup;
  for (auto b : bases) lookup.insert(b.bits());
  for (auto b1 : bases) {
    for (auto b2 : bases) {
      for (auto u : (b1 - b2).elements()) {
        bool found = false;
        for (auto v : (b2 - b1).elements()) {
          if (lookup.count(b1.without(u).with(v).bits())) {
            found = true;
            break;
          }
        }
        if (!found) return ExchangeViolation{b1, b2, u};
      }
    }
  }
  return std::nullopt;
}

Matroid Matroid::from_bases(std::size_t n, std::vector<ElementSet> bases) {
  if (n == 0 || n > kMaxGroundSet) {
    throw InvalidInput("ground set size must be in 1.." + std::to_string(kMaxGroundSet));
  }
  if (bases.empty()) throw InvalidInput("a matroid needs at least one basis");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const std::size_t r = bases.front().size();
  ElementSet covered;
  for (auto b : bases) {
    if (b.size() != r) throw InvalidInput("bases of different cardinalities");
    if (!b.is_subset_of(ElementSet::full(n))) throw InvalidInput("basis " + b.to_string() + " exceeds ground set");
    covered = covered | b;
  }
  if (r == 0) throw LoopyMatroid(0);
  if (auto w = find_exchange_violation(bases)) throw NotAMatroid(*w);
  if (covered != ElementSet::full(n)) throw LoopyMatroid((ElementSet::full(n) - covered).elements().front());

  Matroid m;
  m.n_ = n;
  m.rank_ = r;
  m.bases_ = std::move(bases);
  for (auto b : m.bases_) m.basis_bits_.push_back(b.bits());
  std::sort(m.basis_bits_.begin(), m.basis_bits_.end());

  const std::uint32_t count = 1u << n;
  std::vector<std::uint8_t> rank(count);
  for (std::uint32_t s = 0; s < count; ++s) rank[s] = static_cast<std::uint8_t>(m.rank_of(ElementSet(s)));
  for (std::uint32_t s = 0; s < count; ++s) {
    const ElementSet set(s);
    const bool dependent = rank[s] < set.size();
    if (dependent) {
      bool minimal = true;
      for (auto e : set.elements()) {
        const auto sub = set.without(e).bits();
        if (rank[sub] < ElementSet(sub).size()) {
          minimal = false;
          break;
        }
      }
      if (minimal) m.circuits_.push_back(set);
    }
    bool closed = true;
    for (auto e : (ElementSet::full(n) - set).elements()) {
      if (rank[set.with(e).bits()] == rank[s]) {
        closed = false;
        break;
      }
    }
    if (closed) m.flats_.push_back(set);
  }
  std::sort(m.circuits_.begin(), m.circuits_.end());
  std::sort(m.flats_.begin(), m.flats_.end());
  return m;
}

bool Matroid::is_basis(ElementSet s) const {
  return std::binary_search(basis_bits_.begin(), basis_bits_.end(), s.bits());
}

std::size_t Matroid::rank_of(ElementSet s) const {
  std::size_t best = 0;
  for (auto b : bases_) best = std::max(best, (b & s).size());
  return best;
}

ElementSet Matroid::closure(ElementSet s) const {
  const std::size_t r = rank_of(s);
  ElementSet c = s;
  for (auto e : (ground_set() - s).elements()) {
    if (rank_of(s.with(e)) == r) c.insert(e);
  }
  return c;
}

std::string Matroid::to_string() const {
  std::string out = "M(n=" + std::to_string(n_) + ", bases=[";
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    if (i) out += ",";
    out += bases_[i].to_string();
  }
  return out + "])";
}

Matroid uniform_matroid(std::size_t r, std::size_t n) {
  std::vector<ElementSet> bases;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (ElementSet(s).size() == r) bases.emplace_back(s);
  }
  return Matroid::from_bases(n, std::move(bases));
}

ChainFamily::ChainFamily(std::size_t n, std::vector<ElementSet> sets) : n_(n) {
  if (n == 0 || n > ElementSet::kMaxElements) throw InvalidInput("ground set size out of range");
  const ElementSet all = ElementSet::full(n);
  for (auto s : sets) {
    if (!s.is_subset_of(all)) throw InvalidInput("set " + s.to_string() + " exceeds ground set");
    if (!s.empty()) sets_.push_back(s);
  }
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  if (!contains(all)) throw InvalidInput("family must contain the ground set");
}

bool ChainFamily::contains(ElementSet s) const {
  if (s.empty()) return true;
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

std::vector<Chain> ChainFamily::chains() const {
  // Chains are built downward from E; each member may precede its supersets.
  const ElementSet all = ElementSet::full(n_);
  std::vector<Chain> out;
  std::vector<Chain> frontier{{all}};
  while (!frontier.empty()) {
    std::vector<Chain> next;
    for (const auto& c : frontier) {
      out.push_back(c);
      for (auto s : sets_) {
        if (s.is_proper_subset_of(c.front())) {
          Chain longer;
          longer.reserve(c.size() + 1);
          longer.push_back(s);
          longer.insert(longer.end(), c.begin(), c.end());
          next.push_back(std::move(longer));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Chain> ChainFamily::maximal_chains() const {
  std::vector<Chain> out;
  for (auto& c : chains()) {
    bool extendable = false;
    for (auto s : sets_) {
      if (std::find(c.begin(), c.end(), s) != c.end()) continue;
      // s can be inserted iff it is comparable with every chain member.
      bool comparable = true;
      for (auto f : c) {
        if (!s.is_subset_of(f) && !f.is_subset_of(s)) {
          comparable = false;
          break;
        }
      }
      if (comparable) {
        extendable = true;
        break;
      }
    }
    if (!extendable) out.push_back(std::move(c));
  }
  return out;
}

std::optional<FlatAxiomViolation> verify_flat_family(std::size_t n, std::span<const ElementSet> input) {
  const ElementSet all = ElementSet::full(n);
  std::vector<ElementSet> sets(input.begin(), input.end());
  sets.emplace_back();
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  auto member = [&](ElementSet s) { return std::binary_search(sets.begin(), sets.end(), s); };

  if (!member(all)) return FlatAxiomViolation{1, {all}, "ground set " + all.to_string() + " is not a member"};

  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const ElementSet meet = sets[i] & sets[j];
      if (!member(meet)) {
        return FlatAxiomViolation{2,
                                  {sets[i], sets[j], meet},
                                  sets[i].to_string() + " and " + sets[j].to_string() + " meet in " +
                                      meet.to_string() + ", which is not a member"};
      }
    }
  }

  for (auto f : sets) {
    if (f == all) continue;
    std::vector<ElementSet> covers;
    for (auto g : sets) {
      if (!f.is_proper_subset_of(g)) continue;
      bool minimal = true;
      for (auto h : sets) {
        if (f.is_proper_subset_of(h) && h.is_proper_subset_of(g)) {
          minimal = false;
          break;
        }
      }
      if (minimal) covers.push_back(g);
    }
    ElementSet seen;
    for (auto g : covers) {
      const ElementSet part = g - f;
      if (!(part & seen).empty()) {
        std::vector<ElementSet> w{f};
        w.insert(w.end(), covers.begin(), covers.end());
        return FlatAxiomViolation{3, std::move(w),
                                  "minimal members above " + f.to_string() + " overlap outside it"};
      }
      seen = seen | part;
    }
    if ((seen | f) != all) {
      std::vector<ElementSet> w{f};
      w.insert(w.end(), covers.begin(), covers.end());
      return FlatAxiomViolation{3, std::move(w),
                                "minimal members above " + f.to_string() + " do not cover " +
                                    (all - f).to_string()};
    }
  }
  return std::nullopt;
}

std::optional<FlatAxiomViolation> verify_flat_family(const ChainFamily& family) {
  return verify_flat_family(family.size(), family.sets());
}

Matroid matroid_from_flats(const ChainFamily& family) {
  if (auto v = verify_flat_family(family)) {
    throw PreconditionViolation("not a flat family: " + v->message);
  }
  const std::size_t n = family.size();
  if (n > Matroid::kMaxGroundSet) throw ResourceLimit("ground set too large for basis enumeration");
  std::vector<ElementSet> flats{ElementSet()};
  flats.insert(flats.end(), family.sets().begin(), family.sets().end());
  std::sort(flats.begin(), flats.end());  // by size, so subsets come first

  // Height of each flat in the lattice.
  std::map<std::uint32_t, std::size_t> height;
  for (auto f : flats) {
    std::size_t h = 0;
    for (auto g : flats) {
      if (g.is_proper_subset_of(f)) h = std::max(h, height.at(g.bits()) + 1);
    }
    height[f.bits()] = h;
  }
  auto closure = [&](ElementSet s) {
    ElementSet c = ElementSet::full(n);
    for (auto f : flats) {
      if (s.is_subset_of(f)) c = c & f;
    }
    return c;
  };
  const std::size_t r = height.at(ElementSet::full(n).bits());
  std::vector<ElementSet> bases;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const ElementSet set(s);
    if (set.size() == r && height.at(closure(set).bits()) == r) {
      // A basis spans E and has r elements; equal size and rank forces independence.
      bases.push_back(set);
    }
  }
  return Matroid::from_bases(n, std::move(bases));
}

std::vector<Matroid> enumerate_matroids(std::size_t n) {
  if (n == 0) throw InvalidInput("ground set must be nonempty");
  if (n > 5) throw ResourceLimit("matroid enumeration is limited to n <= 5");
  const ElementSet all = ElementSet::full(n);
  std::vector<Matroid> out;
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<ElementSet> candidates;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (ElementSet(s).size() == r) candidates.emplace_back(s);
    }
    std::sort(candidates.begin(), candidates.end());
    const std::size_t k = candidates.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<ElementSet> family;
      ElementSet covered;
      for (std::size_t i = 0; i < k; ++i) {
        if ((mask >> i) & 1u) {
          family.push_back(candidates[i]);
          covered = covered | candidates[i];
        }
      }
      if (covered != all) continue;
      if (find_exchange_violation(family)) continue;
      out.push_back(Matroid::from_bases(n, std::move(family)));
    }
  }
  return out;
}

}  // namespace tropcvx
