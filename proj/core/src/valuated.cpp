#include "tropcvx/valuated.hpp"

#include <algorithm>

#include "tropcvx/errors.hpp"

namespace tropcvx {

namespace {

const Rational* lookup(const Matroid& m, const Valuation& w, ElementSet b) {
  if (!m.is_basis(b)) return nullptr;
  auto it = w.find(b);
  return it == w.end() ? nullptr : &it->second;
}

void validate(const Matroid& m, const Valuation& w) {
  for (const auto& [b, value] : w) {
    if (!m.is_basis(b)) throw InvalidInput("valuation given on non-basis " + b.to_string());
  }
  for (auto b : m.bases()) {
    if (!w.count(b)) throw InvalidInput("valuation missing on basis " + b.to_string());
  }
}

void normalize(CircuitVector& v) {
  std::optional<Rational> lo;
  for (const auto& e : v) {
    if (e && (!lo || *e < *lo)) lo = *e;
  }
  for (auto& e : v) {
    if (e) *e -= *lo;
  }
}

bool admissible(const Matroid& m, ElementSet c, ElementSet b, std::size_t i) {
  return c.contains(i) && !b.contains(i) && c.without(i).is_subset_of(b) && m.is_basis(b);
}

// v shifted by s, absent entries stay absent.
CircuitVector shifted(const CircuitVector& v, const Rational& s) {
  CircuitVector out = v;
  for (auto& e : out) {
    if (e) *e += s;
  }
  return out;
}

}  // namespace

std::string PlueckerViolation::describe() const {
  return "exchange fails for B1=" + b1.to_string() + ", B2=" + b2.to_string() + ", u=" + std::to_string(u + 1);
}

std::string CircuitAxiomViolation::describe() const {
  if (axiom == 1) return "support of the vector for " + c1.to_string() + " differs from the circuit";
  return "elimination fails for C=" + c1.to_string() + ", C'=" + c2.to_string() + ", i=" + std::to_string(i + 1) +
         ", j=" + std::to_string(j + 1);
}

std::optional<PlueckerViolation> check_pluecker(const Matroid& m, const Valuation& w) {
  validate(m, w);
  for (auto b1 : m.bases()) {
    for (auto b2 : m.bases()) {
      const Rational lhs = w.at(b1) + w.at(b2);
      for (auto u : (b1 - b2).elements()) {
        bool ok = false;
        for (auto v : b2.elements()) {
          const Rational* x = lookup(m, w, b1.without(u).with(v));
          const Rational* y = lookup(m, w, b2.without(v).with(u));
          if (x && y && lhs <= *x + *y) {
            ok = true;
            break;
          }
        }
        if (!ok) return PlueckerViolation{b1, b2, u};
      }
    }
  }
  return std::nullopt;
}

CircuitVector circuit_valuation(const Matroid& m, const Valuation& w, ElementSet c, ElementSet b, std::size_t i) {
  if (!std::binary_search(m.circuits().begin(), m.circuits().end(), c)) {
    throw InvalidInput(c.to_string() + " is not a circuit");
  }
  if (!admissible(m, c, b, i)) throw InvalidInput("C is not the fundamental circuit of the given basis and element");
  const Rational& base = w.at(b);
  CircuitVector v(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j == i) {
      v[j] = Rational(0);
    } else if (b.contains(j)) {
      if (const Rational* x = lookup(m, w, b.without(j).with(i))) v[j] = *x - base;
    }
  }
  normalize(v);
  return v;
}

CircuitVector circuit_valuation(const Matroid& m, const Valuation& w, ElementSet c) {
  if (!std::binary_search(m.circuits().begin(), m.circuits().end(), c)) {
    throw InvalidInput(c.to_string() + " is not a circuit");
  }
  for (auto i : c.elements()) {
    for (auto b : m.bases()) {
      if (admissible(m, c, b, i)) return circuit_valuation(m, w, c, b, i);
    }
  }
  throw Error("no basis realizes " + c.to_string() + " as a fundamental circuit");
}

std::optional<CircuitAxiomViolation> check_circuit_axioms(
    std::size_t n, const std::vector<std::pair<ElementSet, CircuitVector>>& circuits) {
  for (const auto& [c, v] : circuits) {
    bool ok = v.size() == n;
    for (std::size_t k = 0; k < n && ok; ++k) ok = v[k].has_value() == c.contains(k);
    if (!ok) return CircuitAxiomViolation{1, c, c, 0, 0};
  }
  for (const auto& [c, vc] : circuits) {
    for (const auto& [c2, vc2] : circuits) {
      for (auto i : (c & c2).elements()) {
        for (auto j : (c - c2).elements()) {
          const CircuitVector other = shifted(vc2, *vc[i] - *vc2[i]);
          bool found = false;
          for (const auto& [d, vd] : circuits) {
            if (d.contains(i) || !d.contains(j)) continue;
            const CircuitVector cand = shifted(vd, *vc[j] - *vd[j]);
            bool below = true;
            for (std::size_t k = 0; k < n && below; ++k) {
              if (!cand[k]) continue;
              std::optional<Rational> top = vc[k];
              if (other[k] && (!top || *other[k] > *top)) top = other[k];
              below = top && *cand[k] <= *top;
            }
            if (below) {
              found = true;
              break;
            }
          }
          if (!found) return CircuitAxiomViolation{2, c, c2, i, j};
        }
      }
    }
  }
  return std::nullopt;
}

ValuatedMatroid::ValuatedMatroid(Matroid m, Valuation w) : m_(std::move(m)), w_(std::move(w)) {
  if (auto bad = check_pluecker(m_, w_)) throw InvalidInput("not a valuated matroid: " + bad->describe());
  derive();
}

ValuatedMatroid::ValuatedMatroid(Matroid m) : m_(std::move(m)) {
  for (auto b : m_.bases()) w_[b] = 0;
  derive();
}

void ValuatedMatroid::derive() {
  vectors_.clear();
  for (auto c : m_.circuits()) vectors_.push_back(circuit_valuation(m_, w_, c));
}

bool ValuatedMatroid::is_trivial() const {
  return std::all_of(w_.begin(), w_.end(), [&](const auto& kv) { return kv.second == w_.begin()->second; });
}

bool member(const ValuatedMatroid& v, const TropPoint& x) {
  if (x.size() != v.size()) throw InvalidInput("point size differs from the ground set size");
  for (const auto& vc : v.circuit_vectors()) {
    std::optional<Rational> best;
    int count = 0;
    for (std::size_t i = 0; i < vc.size(); ++i) {
      if (!vc[i]) continue;
      const Rational s = x[i] + *vc[i];
      if (!best || s > *best) {
        best = s;
        count = 1;
      } else if (s == *best) {
        ++count;
      }
    }
    if (count < 2) return false;
  }
  return true;
}

linalg::Matrix circuit_hyperplanes(const ValuatedMatroid& v) {
  linalg::Matrix hs;
  const std::size_t n = v.size();
  for (const auto& vc : v.circuit_vectors()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!vc[i] || !vc[j]) continue;
        // x_i + v_i - x_j - v_j with x_0 = 0
        Vec h(n);
        h[0] = *vc[i] - *vc[j];
        if (i > 0) h[i] += 1;
        h[j] -= 1;
        if (std::find(hs.begin(), hs.end(), h) == hs.end()) hs.push_back(std::move(h));
      }
    }
  }
  return hs;
}

bool certify_cell(const ValuatedMatroid& v, const Cell& cell, std::size_t budget) {
  if (cell.ambient_dim() + 1 != v.size()) throw InvalidInput("cell dimension differs from the ground set size");
  for (const auto& piece : cell.refine(circuit_hyperplanes(v), budget)) {
    if (!member(v, TropPoint::from_reduced(piece.interior_point()))) return false;
  }
  return true;
}

}  // namespace tropcvx
