#pragma once

// Deciding whether a weighted fan or complex is supported on a tropical
// linear space. Fans are checked directly against the chain fan of the
// family F_X = {F : v_F in |X|}; complexes through their recession fan; the
// local check recognizes every star up to a common weight multiple.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropcvx/complex.hpp"
#include "tropcvx/matroid.hpp"
#include "tropcvx/trop_point.hpp"

namespace tropcvx {

enum class ReasonKind {
  kNonPure,
  kWeightNotOne,
  kUnbalanced,
  kHetBound,
  kFlatAxiom,
  kSupportMismatch,
  kRecessionMismatch,
};

/// "non-pure", "weight-not-one", ...
std::string to_string(ReasonKind kind);

struct Reason {
  ReasonKind kind = ReasonKind::kNonPure;
  std::string message;
  /// A witness point: in the relative interior of the unbalanced cell, of
  /// too high heterogeneity, or in one support but not the other.
  std::optional<TropPoint> point;
  /// Violated flat axiom (1 to 3) and its witness sets.
  int axiom = 0;
  std::vector<ElementSet> sets;
  /// The recession fan's own rejection, for kRecessionMismatch.
  std::vector<Reason> inner;
};

struct RecognitionReport {
  bool accepted = false;
  std::optional<Matroid> matroid;
  std::optional<Reason> reason;
  /// The recovered family F_X, empty set omitted; empty if not computed.
  std::vector<ElementSet> flats;
  /// Number of maximal cones of the chain fan of F_X, if built.
  std::size_t chain_cones = 0;
  /// Common weight multiple (local check); 1 elsewhere.
  Weight multiplier = 1;
};

/// Default bound on n for the 2^n support queries.
inline constexpr std::size_t kMaxRecoveryN = 12;

/// {F nonempty : v_F in |X|}. Throws ResourceLimit if n > max_n and
/// InvalidInput if X is not a fan.
ChainFamily recover_flat_family(const WeightedComplex& x, std::size_t max_n = kMaxRecoveryN);

/// Compares |X| with |chain_fan(family)| for a pure fan X after refining X
/// along the braid arrangement; returns a kSupportMismatch reason with a
/// witness point in one support but not the other, or nullopt if they agree.
std::optional<Reason> support_mismatch(const WeightedComplex& x, const ChainFamily& family,
                                       std::size_t budget = kDefaultBudget);

/// Decides whether a weighted fan is B(M) with weight 1 for a matroid M.
/// Throws InvalidInput if X is not a fan.
RecognitionReport recognize_fan(const WeightedComplex& x, std::size_t budget = kDefaultBudget);

/// Decides whether a weighted complex is B(M, w) with weight 1: X must be
/// pure and balanced and its recession fan must be recognized.
RecognitionReport decide_complex(const WeightedComplex& x, std::size_t budget = kDefaultBudget);

struct LocalReport {
  TropPoint vertex;
  Weight gcd = 1;
  RecognitionReport report;
};

struct LocalCheck {
  RecognitionReport global;
  std::vector<LocalReport> local;
  bool connected = true;
};

/// Connectivity plus recognition of every star divided by the gcd of its
/// weights, with one common divisor everywhere.
LocalCheck local_check(const WeightedComplex& x, std::size_t budget = kDefaultBudget);

struct ProbeReport {
  bool counterexample = false;
  std::size_t pairs_tested = 0;
  std::optional<TropPoint> from;
  std::optional<TropPoint> to;
  std::optional<TropPoint> gap;
};

/// Sound but incomplete convexity test: segment_in_support on all vertex
/// pairs and on `samples` seeded random point pairs drawn from the cells.
ProbeReport convexity_probe(const WeightedComplex& x, std::size_t samples, std::uint64_t seed);

}  // namespace tropcvx
