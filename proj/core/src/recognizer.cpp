#include "tropcvx/recognizer.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "tropcvx/errors.hpp"

namespace tropcvx {

namespace {

std::string point_text(const TropPoint& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

Reason make_reason(ReasonKind kind, std::string message, std::optional<TropPoint> point = std::nullopt) {
  Reason r;
  r.kind = kind;
  r.message = std::move(message);
  r.point = std::move(point);
  return r;
}

RecognitionReport rejected(Reason reason) {
  RecognitionReport rep;
  rep.reason = std::move(reason);
  return rep;
}

bool chain_within(const Chain& chain, const Chain& outer) {
  return std::all_of(chain.begin(), chain.end(),
                     [&](ElementSet s) { return std::find(outer.begin(), outer.end(), s) != outer.end(); });
}

// Chain of the smallest permutohedral cone containing the relative interior
// of a cell lying inside one such cone.
Chain cell_chain(const Cell& c) { return chn_cell_of(TropPoint::from_reduced(c.interior_point())).chain; }

bool on_boundary(const Cell& face, const Cell& cone) {
  for (const auto& h : cone.inequalities()) {
    if (face.in_hyperplane(h)) return true;
  }
  return false;
}

// A point of `cone` outside |x| near an uncovered facet of a piece.
std::optional<TropPoint> escape_point(const WeightedComplex& x, const Cell& cone, const Cell& piece, const Cell& facet) {
  const Vec inner = piece.interior_point();
  const Vec mid = facet.interior_point();
  Rational t(1);
  for (int step = 0; step < 64; ++step, t /= 2) {
    Vec q = mid;
    for (std::size_t k = 0; k < q.size(); ++k) q[k] += t * (mid[k] - inner[k]);
    if (!cone.contains(q)) continue;
    TropPoint p = TropPoint::from_reduced(q);
    if (!point_in_support(x, p)) return p;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Reason> support_mismatch(const WeightedComplex& x, const ChainFamily& family, std::size_t budget) {
  if (!x.is_fan()) throw InvalidInput("support comparison needs a fan");
  const std::size_t n = x.n();
  const std::vector<Chain> cones = family.maximal_chains();
  const WeightedComplex pieces = refine(x, braid_hyperplanes(n), budget);
  std::vector<Chain> piece_chain(pieces.size());
  for (auto i : pieces.maximal()) {
    piece_chain[i] = cell_chain(pieces.cell(i));
    const bool inside = std::all_of(piece_chain[i].begin(), piece_chain[i].end(),
                                    [&](ElementSet s) { return family.contains(s); });
    if (!inside) {
      return make_reason(ReasonKind::kSupportMismatch, "a cell of X leaves the chain fan of F_X",
                         TropPoint::from_reduced(pieces.cell(i).interior_point()));
    }
  }
  for (const auto& chain : cones) {
    const Cell cone = chain_cone(n, chain);
    std::vector<std::size_t> inside;
    for (auto i : pieces.maximal()) {
      if (pieces.cell(i).dim() == cone.dim() && chain_within(piece_chain[i], chain)) inside.push_back(i);
    }
    const TropPoint centre = TropPoint::from_reduced(cone.interior_point());
    if (inside.empty()) {
      return make_reason(ReasonKind::kSupportMismatch, "a cone of the chain fan of F_X is not covered by X", centre);
    }
    for (auto i : inside) {
      for (auto f : pieces.facets(i)) {
        const Cell& facet = pieces.cell(f);
        if (on_boundary(facet, cone)) continue;
        const auto& co = pieces.cofacets(f);
        const auto shared = std::count_if(co.begin(), co.end(), [&](std::size_t j) {
          return std::find(inside.begin(), inside.end(), j) != inside.end();
        });
        if (shared >= 2) continue;
        auto witness = escape_point(x, cone, pieces.cell(i), facet);
        return make_reason(ReasonKind::kSupportMismatch, "a cone of the chain fan of F_X is only partly covered by X",
                           witness ? witness : std::optional<TropPoint>(centre));
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<TropPoint> vertex_points(const WeightedComplex& x) {
  std::vector<TropPoint> out;
  for (auto i : x.minimal_cells()) out.push_back(TropPoint::from_reduced(x.cell(i).interior_point()));
  return out;
}

Rational draw(std::mt19937_64& rng, long lo, long hi) {
  return Rational(lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)));
}

TropPoint sample_point(const Cell& c, std::mt19937_64& rng) {
  Vec p(c.ambient_dim());
  Rational total(0);
  std::vector<Rational> coef;
  for (std::size_t k = 0; k < c.vertices().size(); ++k) {
    coef.push_back(draw(rng, 1, 4));
    total += coef.back();
  }
  for (std::size_t k = 0; k < c.vertices().size(); ++k) {
    for (std::size_t j = 0; j < p.size(); ++j) p[j] += coef[k] / total * c.vertices()[k][j];
  }
  for (const auto& r : c.rays()) {
    const Rational s = draw(rng, 0, 6) / 2;
    for (std::size_t j = 0; j < p.size(); ++j) p[j] += s * r[j];
  }
  for (const auto& l : c.lineality()) {
    const Rational s = draw(rng, -6, 6) / 2;
    for (std::size_t j = 0; j < p.size(); ++j) p[j] += s * l[j];
  }
  return TropPoint::from_reduced(p);
}

}  // namespace

std::string to_string(ReasonKind kind) {
  switch (kind) {
    case ReasonKind::kNonPure:
      return "non-pure";
    case ReasonKind::kWeightNotOne:
      return "weight-not-one";
    case ReasonKind::kUnbalanced:
      return "unbalanced";
    case ReasonKind::kHetBound:
      return "het-bound";
    case ReasonKind::kFlatAxiom:
      return "flat-axiom";
    case ReasonKind::kSupportMismatch:
      return "support-mismatch";
    case ReasonKind::kRecessionMismatch:
      return "recession-mismatch";
  }
  return "unknown";
}

ChainFamily recover_flat_family(const WeightedComplex& x, std::size_t max_n) {
  if (!x.is_fan()) throw InvalidInput("flat recovery needs a fan");
  const std::size_t n = x.n();
  if (n > max_n) {
    throw ResourceLimit("flat recovery is limited to n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
  }
  std::vector<ElementSet> sets;
  const std::uint32_t full = ElementSet::full(n).bits();
  for (std::uint32_t bits = 1; bits <= full; ++bits) {
    const ElementSet f(bits);
    if (f == ElementSet::full(n) || point_in_support(x, TropPoint::from_reduced(bergman_ray(n, f)))) {
      sets.push_back(f);
    }
  }
  return ChainFamily(n, std::move(sets));
}

RecognitionReport recognize_fan(const WeightedComplex& x, std::size_t budget) {
  if (!x.is_fan()) throw InvalidInput("recognition needs a fan; use the complex decision instead");
  if (!x.is_pure()) return rejected(make_reason(ReasonKind::kNonPure, "maximal cones of different dimensions"));
  for (auto i : x.maximal()) {
    if (x.weight(i) != 1) {
      return rejected(make_reason(ReasonKind::kWeightNotOne,
                                  "maximal cone has weight " + std::to_string(x.weight(i)),
                                  TropPoint::from_reduced(x.cell(i).interior_point())));
    }
  }
  const BalanceReport balance = is_balanced(x);
  if (!balance.balanced) {
    return rejected(make_reason(ReasonKind::kUnbalanced, "balancing fails at a codimension-one cone, residual " + to_string(balance.residual),
                                TropPoint::from_reduced(x.cell(*balance.witness).interior_point())));
  }
  const linalg::Matrix braid = braid_hyperplanes(x.n());
  for (auto i : x.maximal()) {
    const TropPoint p = TropPoint::from_reduced(x.cell(i).generic_point(braid));
    if (heterogeneity(p) > x.dim() + 1) {
      return rejected(make_reason(ReasonKind::kHetBound,
                                  "heterogeneity " + std::to_string(heterogeneity(p)) + " exceeds dimension plus one",
                                  p));
    }
  }

  const ChainFamily family = recover_flat_family(x);
  if (auto bad = verify_flat_family(family)) {
    RecognitionReport rep;
    Reason r = make_reason(ReasonKind::kFlatAxiom, bad->message);
    r.axiom = bad->axiom;
    r.sets = bad->witness;
    rep.reason = std::move(r);
    rep.flats = family.sets();
    return rep;
  }
  const std::vector<Chain> cones = family.maximal_chains();
  if (auto mismatch = support_mismatch(x, family, budget)) {
    RecognitionReport rep = rejected(std::move(*mismatch));
    rep.flats = family.sets();
    rep.chain_cones = cones.size();
    return rep;
  }
  RecognitionReport rep;
  rep.accepted = true;
  rep.matroid = matroid_from_flats(family);
  rep.flats = family.sets();
  rep.chain_cones = cones.size();
  return rep;
}

RecognitionReport decide_complex(const WeightedComplex& x, std::size_t budget) {
  if (!x.is_pure()) return rejected(make_reason(ReasonKind::kNonPure, "maximal cells of different dimensions"));
  const BalanceReport balance = is_balanced(x);
  if (!balance.balanced) {
    return rejected(make_reason(ReasonKind::kUnbalanced, "balancing fails at a codimension-one cell, residual " + to_string(balance.residual),
                                TropPoint::from_reduced(x.cell(*balance.witness).interior_point())));
  }
  RecognitionReport rep = recognize_fan(recession_fan(x, budget), budget);
  if (!rep.accepted) {
    Reason outer = make_reason(ReasonKind::kRecessionMismatch,
                               "recession fan rejected: " + to_string(rep.reason->kind), rep.reason->point);
    outer.inner.push_back(std::move(*rep.reason));
    rep.reason = std::move(outer);
  }
  return rep;
}

LocalCheck local_check(const WeightedComplex& x, std::size_t budget) {
  LocalCheck out;
  // Union-find over maximal cells joined through shared faces.
  std::vector<std::size_t> parent(x.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::vector<std::optional<std::size_t>> owner(x.size());
  for (auto m : x.maximal()) {
    std::vector<std::size_t> stack{m};
    std::vector<bool> seen(x.size(), false);
    while (!stack.empty()) {
      const std::size_t c = stack.back();
      stack.pop_back();
      if (seen[c]) continue;
      seen[c] = true;
      if (owner[c]) {
        parent[root(m)] = root(*owner[c]);
      } else {
        owner[c] = m;
      }
      for (auto f : x.facets(c)) stack.push_back(f);
    }
  }
  for (auto m : x.maximal()) {
    if (root(m) != root(x.maximal().front())) {
      out.connected = false;
      out.global = rejected(make_reason(ReasonKind::kSupportMismatch, "disconnected",
                                        TropPoint::from_reduced(x.cell(m).interior_point())));
      return out;
    }
  }

  for (const auto& p : vertex_points(x)) {
    const WeightedComplex star = star_fan(x, p, budget);
    Weight g = 0;
    for (auto i : star.maximal()) g = std::gcd(g, star.weight(i));
    LocalReport local{p, g, recognize_fan(star.divided(g), budget)};
    local.report.multiplier = g;
    out.local.push_back(std::move(local));
  }

  const Weight k = out.local.empty() ? 1 : out.local.front().gcd;
  for (const auto& local : out.local) {
    if (!local.report.accepted) {
      Reason r = *local.report.reason;
      r.message = "star at " + point_text(local.vertex) + ": " + r.message;
      if (!r.point) r.point = local.vertex;
      out.global = rejected(std::move(r));
      return out;
    }
  }
  for (const auto& local : out.local) {
    if (local.gcd != k) {
      out.global = rejected(make_reason(ReasonKind::kWeightNotOne,
                                        "star multipliers differ: " + std::to_string(k) + " and " +
                                            std::to_string(local.gcd) + " at " + point_text(local.vertex),
                                        local.vertex));
      return out;
    }
  }
  RecognitionReport global = recognize_fan(recession_fan(x.divided(k), budget), budget);
  if (!global.accepted) {
    Reason outer = make_reason(ReasonKind::kRecessionMismatch, "recession fan rejected: " + to_string(global.reason->kind),
                               global.reason->point);
    outer.inner.push_back(std::move(*global.reason));
    global.reason = std::move(outer);
  }
  global.multiplier = k;
  out.global = std::move(global);
  return out;
}

ProbeReport convexity_probe(const WeightedComplex& x, std::size_t samples, std::uint64_t seed) {
  ProbeReport out;
  auto test = [&](const TropPoint& a, const TropPoint& b) {
    ++out.pairs_tested;
    const SegmentCoverage cov = segment_in_support(x, a, b);
    if (cov.covered) return false;
    out.counterexample = true;
    out.from = a;
    out.to = b;
    out.gap = cov.gap;
    return true;
  };
  std::vector<TropPoint> points;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (const auto& v : x.cell(i).vertices()) {
      TropPoint p = TropPoint::from_reduced(v);
      if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(std::move(p));
    }
  }
  if (points.empty()) points = vertex_points(x);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (test(points[i], points[j])) return out;
    }
  }
  const auto& maximal = x.maximal();
  if (maximal.empty()) return out;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Cell& c1 = x.cell(maximal[rng() % maximal.size()]);
    const Cell& c2 = x.cell(maximal[rng() % maximal.size()]);
    const TropPoint a = sample_point(c1, rng);
    const TropPoint b = sample_point(c2, rng);
    if (test(a, b)) return out;
  }
  return out;
}

}  // namespace tropcvx
