#pragma once

// Loopfree matroids on {1..n} given by their bases, with the derived
// circuits, flats and rank function, plus the flat-axiom machinery used to
// recognize a flat lattice read off a fan.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropcvx/element_set.hpp"
#include "tropcvx/errors.hpp"

namespace tropcvx {

/// Witness that the basis exchange axiom fails: no v in B2 makes B1 - u + v a
/// basis.
struct ExchangeViolation {
  ElementSet b1;
  ElementSet b2;
  std::size_t u;

  std::string describe() const;
};

class NotAMatroid : public Error {
 public:
  explicit NotAMatroid(ExchangeViolation w) : Error("not a matroid: " + w.describe()), witness(w) {}
  ExchangeViolation witness;
};

class LoopyMatroid : public Error {
 public:
  explicit LoopyMatroid(std::size_t loop)
      : Error("element " + std::to_string(loop + 1) + " lies in no basis (loop)"), loop(loop) {}
  std::size_t loop;
};

class Matroid {
 public:
  /// Ground sets larger than this are rejected, since circuits and flats are
  /// enumerated over all subsets.
  static constexpr std::size_t kMaxGroundSet = 20;

  /// Validates and builds. Throws InvalidInput (mixed cardinalities, empty
  /// family, element out of range), NotAMatroid or LoopyMatroid.
  static Matroid from_bases(std::size_t n, std::vector<ElementSet> bases);

  std::size_t size() const { return n_; }
  std::size_t rank() const { return rank_; }
  ElementSet ground_set() const { return ElementSet::full(n_); }
  /// Sorted ascending (size, then lexicographic).
  const std::vector<ElementSet>& bases() const { return bases_; }
  const std::vector<ElementSet>& circuits() const { return circuits_; }
  /// Includes the empty set and E.
  const std::vector<ElementSet>& flats() const { return flats_; }

  bool is_basis(ElementSet s) const;
  bool is_independent(ElementSet s) const { return rank_of(s) == s.size(); }
  std::size_t rank_of(ElementSet s) const;
  ElementSet closure(ElementSet s) const;

  friend bool operator==(const Matroid& a, const Matroid& b) { return a.n_ == b.n_ && a.bases_ == b.bases_; }

  std::string to_string() const;

 private:
  Matroid() = default;
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::vector<ElementSet> bases_;
  std::vector<std::uint32_t> basis_bits_;  // sorted, for binary search
  std::vector<ElementSet> circuits_;
  std::vector<ElementSet> flats_;
};

/// First violation of basis exchange, scanning pairs in sorted order.
std::optional<ExchangeViolation> find_exchange_violation(std::span<const ElementSet> bases);

inline const std::vector<ElementSet>& circuits(const Matroid& m) { return m.circuits(); }
inline const std::vector<ElementSet>& flats(const Matroid& m) { return m.flats(); }
inline std::size_t rank(const Matroid& m, ElementSet s) { return m.rank_of(s); }

/// The uniform matroid U(r, n).
Matroid uniform_matroid(std::size_t r, std::size_t n);

/// A strictly increasing sequence of nonempty sets ending at E.
using Chain = std::vector<ElementSet>;

/// A family of subsets of {1..n} containing E. The empty set is implicit and
/// never stored.
class ChainFamily {
 public:
  /// Throws InvalidInput if E is missing or a set exceeds the ground set.
  ChainFamily(std::size_t n, std::vector<ElementSet> sets);

  std::size_t size() const { return n_; }
  /// Sorted ascending, without the empty set.
  const std::vector<ElementSet>& sets() const { return sets_; }
  bool contains(ElementSet s) const;

  /// Every chain F_1 < ... < F_d = E of members (including the chain (E)).
  std::vector<Chain> chains() const;
  /// Chains that cannot be extended by inserting another member.
  std::vector<Chain> maximal_chains() const;

 private:
  std::size_t n_;
  std::vector<ElementSet> sets_;
};

struct FlatAxiomViolation {
  /// 1: E missing; 2: not closed under intersection; 3: the minimal members
  /// above a member F do not partition E \ F.
  int axiom = 0;
  std::vector<ElementSet> witness;
  std::string message;
};

/// Checks the flat axioms on `sets` with the empty set adjoined. Returns the
/// first violation found, or nullopt when the family is the flat family of a
/// loopfree matroid.
std::optional<FlatAxiomViolation> verify_flat_family(std::size_t n, std::span<const ElementSet> sets);
std::optional<FlatAxiomViolation> verify_flat_family(const ChainFamily& family);

/// Rebuilds the matroid from a valid flat family. Throws PreconditionViolation
/// if the family fails verify_flat_family.
Matroid matroid_from_flats(const ChainFamily& family);

/// Every loopfree matroid on {1..n} (labelled, no isomorphism reduction),
/// ordered by rank and then by basis family. Throws ResourceLimit for n > 5.
std::vector<Matroid> enumerate_matroids(std::size_t n);

}  // namespace tropcvx
