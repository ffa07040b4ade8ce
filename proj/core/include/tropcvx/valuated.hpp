#pragma once

// Valuated matroids given by a basis valuation w satisfying the tropical
// Pluecker relations in exchange form, their circuit vectors
// (v_C)_j = w(B - j + i) - w(B), and membership in the tropical linear space
// B(M, w) = {x : max_{i in C} (x_i + (v_C)_i) is attained twice for all C}.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropcvx/cell.hpp"
#include "tropcvx/complex.hpp"
#include "tropcvx/matroid.hpp"
#include "tropcvx/trop_point.hpp"

namespace tropcvx {

using Valuation = std::map<ElementSet, Rational>;

/// Entries off the circuit are absent (minus infinity).
using CircuitVector = std::vector<std::optional<Rational>>;

struct PlueckerViolation {
  ElementSet b1;
  ElementSet b2;
  std::size_t u;

  std::string describe() const;
};

/// Exchange-form Pluecker relations. Throws InvalidInput when w misses a
/// basis or values a non-basis.
std::optional<PlueckerViolation> check_pluecker(const Matroid& m, const Valuation& w);

/// v_C from the first admissible pair (B, i) with i in C, i not in B and
/// C - i contained in B, normalized to minimum finite entry 0. Throws
/// InvalidInput if c is not a circuit.
CircuitVector circuit_valuation(const Matroid& m, const Valuation& w, ElementSet c);
/// v_C from a given pair (B, i); throws InvalidInput if it is inadmissible.
CircuitVector circuit_valuation(const Matroid& m, const Valuation& w, ElementSet c, ElementSet b, std::size_t i);

struct CircuitAxiomViolation {
  /// 1: support differs from the circuit; 2: elimination fails for (c1, c2, i, j).
  int axiom = 0;
  ElementSet c1;
  ElementSet c2;
  std::size_t i = 0;
  std::size_t j = 0;

  std::string describe() const;
};

std::optional<CircuitAxiomViolation> check_circuit_axioms(
    std::size_t n, const std::vector<std::pair<ElementSet, CircuitVector>>& circuits);

class ValuatedMatroid {
 public:
  /// Throws InvalidInput if w is incomplete or violates the Pluecker
  /// relations.
  ValuatedMatroid(Matroid m, Valuation w);
  /// The trivial valuation w = 0.
  explicit ValuatedMatroid(Matroid m);

  const Matroid& matroid() const { return m_; }
  std::size_t size() const { return m_.size(); }
  const Valuation& valuation() const { return w_; }
  /// One vector per circuit, in the order of matroid().circuits().
  const std::vector<CircuitVector>& circuit_vectors() const { return vectors_; }
  bool is_trivial() const;

 private:
  void derive();

  Matroid m_;
  Valuation w_;
  std::vector<CircuitVector> vectors_;
};

/// Point membership in B(M, w). Throws InvalidInput on a size mismatch.
bool member(const ValuatedMatroid& v, const TropPoint& x);

/// Hyperplanes x_i + (v_C)_i = x_j + (v_C)_j in reduced coordinates.
linalg::Matrix circuit_hyperplanes(const ValuatedMatroid& v);

/// True iff the whole cell lies in B(M, w): refines along the circuit
/// hyperplanes and tests one relative interior point per piece.
bool certify_cell(const ValuatedMatroid& v, const Cell& cell, std::size_t budget = kDefaultBudget);

}  // namespace tropcvx
