// One line per acceptance criterion with its runtime; exit status 1 if any
// criterion fails or exceeds its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/linear_space.hpp"
#include "tropcvx/recognizer.hpp"
#include "tropcvx/valuated.hpp"

namespace tropcvx {
namespace {

ElementSet S(std::initializer_list<int> labels) { return ElementSet::from_labels(labels); }

std::vector<Matroid> all_matroids() {
  std::vector<Matroid> out;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto& m : enumerate_matroids(n)) out.push_back(std::move(m));
  }
  return out;
}

Valuation u23_w() { return {{S({1, 2}), 0}, {S({1, 3}), 0}, {S({2, 3}), 1}}; }

Valuation u24_w() {
  Valuation w;
  const Matroid u24 = uniform_matroid(2, 4);
  for (auto b : u24.bases()) w[b] = b == S({1, 2}) ? Rational(-1) : Rational(0);
  return w;
}

std::string str(const TropPoint& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

// Each check returns an empty string on success, else a failure description.
std::string bergman_balancing() {
  std::size_t count = 0;
  for (const auto& m : all_matroids()) {
    if (!is_balanced(testing::bergman_fan(m)).balanced) return "unbalanced: " + m.to_string();
    ++count;
  }
  return count == 221 ? "" : "expected 221 matroids, got " + std::to_string(count);
}

std::string recognition_round_trip() {
  for (const auto& m : all_matroids()) {
    const RecognitionReport rep = recognize_fan(testing::bergman_fan(m));
    if (!rep.accepted) return "rejected: " + m.to_string();
    if (!(*rep.matroid == m) || rep.flats != testing::flat_family(m).sets()) return "wrong matroid for " + m.to_string();
  }
  return "";
}

std::string weight_two_rejection() {
  const RecognitionReport rep = recognize_fan(testing::bergman_fan(uniform_matroid(2, 3)).scaled(2));
  if (rep.accepted || rep.reason->kind != ReasonKind::kWeightNotOne) return "not rejected with weight-not-one";
  return "";
}

std::string plus_e_negative() {
  std::vector<Cell> rays;
  for (std::size_t i = 0; i < 3; ++i) {
    Vec v(3);
    v[i] = 1;
    rays.push_back(Cell::cone(2, {TropPoint::canonicalize(v).reduced()}));
  }
  const auto x = WeightedComplex::from_maximal_cells(3, rays, {1, 1, 1});
  if (!is_balanced(x).balanced) return "fan is not balanced";
  const RecognitionReport rep = recognize_fan(x);
  if (rep.accepted || rep.reason->kind != ReasonKind::kFlatAxiom) return "not rejected by a flat axiom";
  const std::vector<ElementSet> witness{S({1, 2}), S({1, 3}), S({1})};
  if (rep.reason->sets != witness) return "unexpected witness";
  if (ChainFamily(3, rep.flats).contains(S({1}))) return "{1} should be missing from the family";
  const ProbeReport probe = convexity_probe(x, 100, 1);
  if (!probe.counterexample) return "probe found no counterexample";
  if (point_in_support(x, *probe.gap)) return "probe gap lies in the support";
  return "";
}

std::string valuated_convexity() {
  testing::Gen gen(2024);
  for (const auto& w : {std::pair{uniform_matroid(2, 3), u23_w()}, std::pair{uniform_matroid(2, 4), u24_w()}}) {
    const ValuatedMatroid v(w.first, w.second);
    const WeightedComplex x = testing::linear_space_complex(v);
    const auto& maximal = x.maximal();
    auto sample = [&] {
      const Cell& c = x.cell(maximal[static_cast<std::size_t>(gen.integer(0, static_cast<long>(maximal.size()) - 1))]);
      return TropPoint::from_reduced(gen.point_in(c));
    };
    for (int k = 0; k < 1000; ++k) {
      const TropPoint a = sample();
      const TropPoint b = sample();
      if (!member(v, a) || !member(v, b)) return "sampled point is not a member";
      for (const auto& p : segment(a, b)) {
        if (!member(v, p)) return "breakpoint " + str(p) + " of segment " + str(a) + " to " + str(b) + " fails";
      }
      const std::vector<TropTerm> terms{{gen.rational(), a}, {gen.rational(), b}};
      const TropPoint c = trop_combine(terms);
      if (!member(v, c)) return "combination " + str(c) + " fails";
    }
  }
  return "";
}

std::string tree_decision() {
  const WeightedComplex tree = testing::linear_space_complex(ValuatedMatroid(uniform_matroid(2, 4), u24_w()));
  const RecognitionReport rep = decide_complex(tree);
  if (!rep.accepted || !(*rep.matroid == uniform_matroid(2, 4))) return "tree not accepted as U(2,4)";
  const WeightedComplex rec = recession_fan(tree);
  if (support_mismatch(rec, testing::flat_family(uniform_matroid(2, 4)))) return "recession support differs";
  const WeightedComplex b = testing::bergman_fan(uniform_matroid(2, 4));
  auto covered = [](const WeightedComplex& inner, const WeightedComplex& outer) {
    for (const auto& c : inner.maximal_cells()) {
      bool found = false;
      for (const auto& d : outer.maximal_cells()) found = found || d.contains_cell(c);
      if (!found) return false;
    }
    return true;
  };
  if (!covered(rec, b) || !covered(b, rec)) return "cone containment fails";
  return "";
}

std::string heterogeneity_bound() {
  testing::Gen gen(77);
  for (const auto& m : all_matroids()) {
    const WeightedComplex x = testing::bergman_fan(m);
    for (const auto& c : x.cells()) {
      for (const auto& v : c.vertices()) {
        if (heterogeneity(TropPoint::from_reduced(v)) > m.rank()) return "vertex violates the bound";
      }
      for (const auto& r : c.rays()) {
        if (heterogeneity(TropPoint::from_reduced(r)) > m.rank()) return "ray violates the bound";
      }
    }
    const auto& maximal = x.maximal();
    for (int k = 0; k < 500; ++k) {
      const Cell& c = x.cell(maximal[static_cast<std::size_t>(gen.integer(0, static_cast<long>(maximal.size()) - 1))]);
      const TropPoint p = TropPoint::from_reduced(gen.point_in(c));
      if (heterogeneity(p) > m.rank()) return str(p) + " in B(" + m.to_string() + ") violates the bound";
    }
  }
  return "";
}

std::string norm_identities() {
  testing::Gen gen(55);
  for (int k = 0; k < 10000; ++k) {
    const TropPoint x = gen.point(6);
    const TropPoint y = gen.point(6);
    const auto pts = segment(x, y);
    Rational total = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) total += trop_norm(pts[i] - pts[i - 1]);
    if (total != trop_norm(y - x)) return "additivity fails for " + str(x) + ", " + str(y);
  }
  for (int k = 0; k < 10000; ++k) {
    const TropPoint x = gen.point(6);
    const TropPoint y = gen.point(6);
    const TropPoint z = gen.point(6);
    const ElementSet bound = imax(x - z) | imax(y - z);
    for (const auto& p : segment(x, y)) {
      if (!imax(p - z).is_subset_of(bound)) return "I_max inclusion fails";
    }
  }
  return "";
}

std::string star_and_local() {
  const WeightedComplex tree = testing::linear_space_complex(ValuatedMatroid(uniform_matroid(2, 4), u24_w()));
  std::size_t vertices = 0;
  for (auto i : tree.minimal_cells()) {
    const TropPoint p = TropPoint::from_reduced(tree.cell(i).interior_point());
    if (!recognize_fan(star_fan(tree, p)).accepted) return "star at " + str(p) + " rejected";
    ++vertices;
  }
  if (vertices != 2) return "expected 2 vertices";
  if (!local_check(tree).global.accepted) return "local check rejects the tree";
  const WeightedComplex b = testing::bergman_fan(uniform_matroid(2, 3));
  std::vector<Cell> cells = b.maximal_cells();
  for (const auto& c : b.translated(TropPoint::canonicalize({0, 5, 5})).maximal_cells()) cells.push_back(c);
  const auto two = WeightedComplex::from_maximal_cells(3, cells, std::vector<Weight>(cells.size(), 1), false);
  const LocalCheck check = local_check(two);
  if (check.global.accepted || check.connected) return "disjoint union accepted";
  return "";
}

std::string permutohedral_count() {
  std::vector<ElementSet> all;
  for (std::uint32_t b = 1; b < 8; ++b) all.emplace_back(b);
  const WeightedComplex ch3 = chain_fan(ChainFamily(3, all));
  if (ch3.maximal().size() != 6) return "maximal cones: " + std::to_string(ch3.maximal().size());
  if (ch3.size() != 13) return "cones: " + std::to_string(ch3.size());
  return "";
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<std::string()> check;
};

}  // namespace
}  // namespace tropcvx

int main() {
  using namespace tropcvx;
  const std::vector<Criterion> criteria{
      {1, "Bergman fans of all loopfree matroids n <= 5 are balanced", 30, bergman_balancing},
      {2, "recognize_fan round trip for all loopfree matroids n <= 5", 60, recognition_round_trip},
      {3, "B(U(2,3)) with weight 2 rejected as weight-not-one", 1, weight_two_rejection},
      {4, "+e_i fan rejected by the intersection axiom; probe finds a gap", 5, plus_e_negative},
      {5, "B(M,w) closed under segments and combinations (2 x 1000 pairs)", 30, valuated_convexity},
      {6, "U(2,4) tree decided as U(2,4); recession support equals B(U(2,4))", 30, tree_decision},
      {7, "heterogeneity at most rank on B(M), n <= 5", 30, heterogeneity_bound},
      {8, "norm additivity and I_max inclusion (10^4 samples each)", 30, norm_identities},
      {9, "stars and local check of the U(2,4) tree; disjoint union rejected", 30, star_and_local},
      {10, "chain fan of all subsets of {1,2,3}: 6 maximal cones, 13 cones", 1, permutohedral_count},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && secs > c.limit_seconds) problem = "time limit exceeded";
    const bool ok = problem.empty();
    failures += !ok;
    std::printf("criterion %2d: %s  %-68s %8.3f s (limit %g s)%s%s\n", c.id, ok ? "PASS" : "FAIL", c.name, secs,
                c.limit_seconds, ok ? "" : "  ", problem.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
