#include "tropcvx/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "tropcvx/errors.hpp"
#include "tropcvx/lattice.hpp"

namespace tropcvx {

using linalg::Matrix;

namespace {

std::unordered_set<std::string> face_keys(const Cell& c) {
  std::unordered_set<std::string> keys;
  for (const auto& f : all_faces(c)) keys.insert(f.key());
  return keys;
}

void add_unique_hyperplane(Matrix& hs, const Vec& h) {
  Vec p = primitive_integer(h);
  if (linalg::is_zero(p)) return;
  // Orient so the first nonzero entry is positive.
  for (const auto& x : p) {
    if (sgn(x) != 0) {
      if (sgn(x) < 0) p = linalg::scale(p, -1);
      break;
    }
  }
  if (std::find(hs.begin(), hs.end(), p) == hs.end()) hs.push_back(std::move(p));
}

Vec primitive_normal_of(const Cell& sigma, const Cell& tau) {
  const std::size_t d = sigma.ambient_dim();
  const Matrix span_sigma = sigma.direction_basis();
  Matrix basis = tau.direction_basis();
  const Vec q = linalg::sub(sigma.interior_point(), tau.interior_point());
  basis.push_back(q);

  // phi(b) = coefficient of q when b in V_sigma is written over V_tau + R q.
  const Matrix lattice_basis = lattice::saturated_basis(span_sigma, d);
  std::vector<Rational> phi;
  for (const auto& b : lattice_basis) {
    auto c = linalg::coordinates(basis, b);
    if (!c) throw Error("lattice vector outside the span of its cell");
    phi.push_back(c->back());
  }
  Integer l = 1;
  for (const auto& v : phi) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<Integer> ints;
  for (const auto& v : phi) ints.push_back(Integer(v * l));
  const std::vector<Integer> m = lattice::bezout(ints);
  Vec u = linalg::zeros(d);
  for (std::size_t i = 0; i < lattice_basis.size(); ++i) {
    if (m[i] != 0) u = linalg::axpy(u, Rational(m[i]), lattice_basis[i]);
  }
  return u;
}

// Distinct cones with summed weights; cones inside higher-dimensional ones
// are dropped.
std::pair<std::vector<Cell>, std::vector<Weight>> keep_maximal(const std::vector<Cell>& cells,
                                                               const std::vector<Weight>& weights) {
  std::vector<Cell> distinct;
  std::vector<Weight> sums;
  std::unordered_map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto [it, fresh] = at.emplace(cells[i].key(), distinct.size());
    if (fresh) {
      distinct.push_back(cells[i]);
      sums.push_back(weights[i]);
    } else {
      sums[it->second] += weights[i];
    }
  }
  std::vector<Cell> out;
  std::vector<Weight> out_w;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < distinct.size() && !covered; ++j) {
      covered = distinct[j].dim() > distinct[i].dim() && distinct[j].contains_cell(distinct[i]);
    }
    if (!covered) {
      out.push_back(distinct[i]);
      out_w.push_back(sums[i]);
    }
  }
  return {out, out_w};
}

Matrix hyperplanes_of(const std::vector<Cell>& cells) {
  Matrix hs;
  for (const auto& c : cells) {
    for (const auto& a : c.inequalities()) add_unique_hyperplane(hs, a);
    for (const auto& e : c.equations()) add_unique_hyperplane(hs, e);
  }
  return hs;
}

// Closed parameter interval {t in [0,1] : a + t (b - a) in cell}.
std::optional<std::pair<Rational, Rational>> parameter_interval(const Cell& c, const Vec& a, const Vec& b) {
  Rational lo = 0;
  Rational hi = 1;
  auto constrain = [&](const Vec& h, bool equality) {
    const Rational at0 = evaluate_affine(h, a);
    const Rational slope = evaluate_affine(h, b) - at0;
    if (sgn(slope) == 0) {
      return equality ? sgn(at0) == 0 : sgn(at0) >= 0;
    }
    const Rational root = -at0 / slope;
    if (equality) {
      lo = std::max(lo, root);
      hi = std::min(hi, root);
    } else if (sgn(slope) > 0) {
      lo = std::max(lo, root);
    } else {
      hi = std::min(hi, root);
    }
    return lo <= hi;
  };
  for (const auto& e : c.equations()) {
    if (!constrain(e, true)) return std::nullopt;
  }
  for (const auto& f : c.inequalities()) {
    if (!constrain(f, false)) return std::nullopt;
  }
  return std::make_pair(lo, hi);
}

}  // namespace

std::vector<Cell> all_faces(const Cell& c) {
  std::vector<Cell> out{c};
  std::unordered_set<std::string> seen{c.key()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto& f : out[i].facets()) {
      if (seen.insert(f.key()).second) out.push_back(std::move(f));
    }
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_bad_intersection(const std::vector<Cell>& cells) {
  std::vector<std::unordered_set<std::string>> faces;
  faces.reserve(cells.size());
  for (const auto& c : cells) faces.push_back(face_keys(c));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      auto common = cells[i].intersect(cells[j].inequalities(), cells[j].equations());
      if (!common) continue;
      if (!faces[i].count(common->key()) || !faces[j].count(common->key())) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::size_t WeightedComplex::add_cell(Cell c) {
  auto [it, fresh] = index_.emplace(c.key(), cells_.size());
  if (fresh) {
    cells_.push_back(std::move(c));
    weights_.push_back(0);
    facets_.emplace_back();
    cofacets_.emplace_back();
  }
  return it->second;
}

WeightedComplex WeightedComplex::from_maximal_cells(std::size_t n, const std::vector<Cell>& cells,
                                                    const std::vector<Weight>& weights, bool check_intersections) {
  if (n == 0) throw InvalidInput("complex needs n >= 1");
  if (cells.empty()) throw InvalidInput("complex needs at least one cell");
  if (cells.size() != weights.size()) throw InvalidInput("one weight per maximal cell required");
  WeightedComplex x;
  x.n_ = n;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].ambient_dim() != n - 1) throw InvalidInput("cell has wrong ambient dimension");
    if (weights[i] <= 0) throw InvalidInput("weights must be positive integers");
    const std::size_t before = x.cells_.size();
    const std::size_t idx = x.add_cell(cells[i]);
    if (idx != before) throw InvalidInput("cell listed twice: " + cells[i].key());
    x.weights_[idx] = weights[i];
    x.maximal_.push_back(idx);
    x.dim_ = std::max(x.dim_, cells[i].dim());
  }

  std::vector<bool> expanded(x.cells_.size(), false);
  std::deque<std::size_t> queue(x.maximal_.begin(), x.maximal_.end());
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    if (i < expanded.size() && expanded[i]) continue;
    if (i >= expanded.size()) expanded.resize(i + 1, false);
    expanded[i] = true;
    const std::vector<Cell> fs = x.cells_[i].facets();
    for (const auto& f : fs) {
      const std::size_t j = x.add_cell(f);
      if (x.weights_[j] > 0) throw InvalidInput("a listed cell is a face of another listed cell");
      x.facets_[i].push_back(j);
      x.cofacets_[j].push_back(i);
      if (j >= expanded.size() || !expanded[j]) queue.push_back(j);
    }
  }

  if (check_intersections) {
    if (auto bad = find_bad_intersection(cells)) {
      throw InvalidInput("cells " + std::to_string(bad->first + 1) + " and " + std::to_string(bad->second + 1) +
                         " do not meet in a common face");
    }
  }
  return x;
}

bool WeightedComplex::is_pure() const {
  return std::all_of(maximal_.begin(), maximal_.end(), [&](std::size_t i) { return cells_[i].dim() == dim_; });
}

bool WeightedComplex::is_fan() const {
  return std::all_of(maximal_.begin(), maximal_.end(), [&](std::size_t i) { return cells_[i].is_cone(); });
}

std::vector<std::size_t> WeightedComplex::minimal_cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (facets_[i].empty()) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> WeightedComplex::find(const Cell& c) const {
  auto it = index_.find(c.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Cell> WeightedComplex::maximal_cells() const {
  std::vector<Cell> out;
  for (auto i : maximal_) out.push_back(cells_[i]);
  return out;
}

std::vector<Weight> WeightedComplex::maximal_weights() const {
  std::vector<Weight> out;
  for (auto i : maximal_) out.push_back(weights_[i]);
  return out;
}

WeightedComplex WeightedComplex::scaled(Weight k) const {
  if (k <= 0) throw InvalidInput("weight multiplier must be positive");
  WeightedComplex x = *this;
  for (auto& w : x.weights_) w *= k;
  return x;
}

WeightedComplex WeightedComplex::divided(Weight d) const {
  WeightedComplex x = *this;
  for (auto i : maximal_) {
    if (d <= 0 || x.weights_[i] % d != 0) throw InvalidInput("divisor does not divide every weight");
    x.weights_[i] /= d;
  }
  return x;
}

WeightedComplex WeightedComplex::translated(const TropPoint& t) const {
  if (t.size() != n_) throw InvalidInput("translation has wrong size");
  const Vec shift = t.reduced();
  std::vector<Cell> cs;
  for (auto i : maximal_) cs.push_back(cells_[i].translated(shift));
  return from_maximal_cells(n_, cs, maximal_weights(), false);
}

Vec bergman_ray(std::size_t n, ElementSet f) { return TropPoint::indicator(n, f).reduced(); }

Matrix braid_hyperplanes(std::size_t n) {
  Matrix hs;
  const std::size_t d = n - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec h(d + 1);
      // x_i - x_j with x_0 = 0 and x_k = y_{k-1}
      if (i > 0) h[i] = 1;
      h[j] = -1;
      hs.push_back(std::move(h));
    }
  }
  return hs;
}

std::optional<std::size_t> point_in_support(const WeightedComplex& x, const TropPoint& p) {
  if (p.size() != x.n()) throw InvalidInput("point has wrong size");
  const Vec r = p.reduced();
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (best && x.cell(i).dim() >= x.cell(*best).dim()) continue;
    if (x.cell(i).contains(r)) best = i;
  }
  return best;
}

Vec primitive_normal(const Cell& sigma, const Cell& tau) {
  if (sigma.ambient_dim() != tau.ambient_dim() || tau.dim() + 1 != sigma.dim()) {
    throw InvalidInput("not a facet: dimensions do not match");
  }
  const auto fs = sigma.facets();
  const bool is_facet = std::any_of(fs.begin(), fs.end(), [&](const Cell& f) { return f == tau; });
  if (!is_facet) throw InvalidInput("not a facet of the given cell");
  return primitive_normal_of(sigma, tau);
}

BalanceReport is_balanced(const WeightedComplex& x) {
  if (!x.is_pure()) throw InvalidInput("balancing needs a pure complex");
  BalanceReport report;
  if (x.dim() == 0) return report;
  const std::size_t d = x.ambient_dim();
  for (std::size_t t = 0; t < x.size(); ++t) {
    const Cell& tau = x.cell(t);
    if (tau.dim() + 1 != x.dim()) continue;
    Vec sum = linalg::zeros(d);
    for (auto s : x.cofacets(t)) {
      if (!x.is_maximal(s)) continue;
      sum = linalg::axpy(sum, Rational(static_cast<long>(x.weight(s))), primitive_normal_of(x.cell(s), tau));
    }
    const linalg::Echelon span = linalg::echelon(tau.direction_basis(), d);
    if (!span.contains(sum)) {
      report.balanced = false;
      report.witness = t;
      report.residual = span.reduce(sum);
      return report;
    }
  }
  return report;
}

WeightedComplex refine(const WeightedComplex& x, const Matrix& hyperplanes, std::size_t budget) {
  std::vector<Cell> cells;
  std::vector<Weight> weights;
  for (auto i : x.maximal()) {
    for (auto& piece : x.cell(i).refine(hyperplanes, budget)) {
      cells.push_back(std::move(piece));
      weights.push_back(x.weight(i));
      if (cells.size() > budget) throw ResourceLimit("refinement exceeded budget of " + std::to_string(budget));
    }
  }
  return WeightedComplex::from_maximal_cells(x.n(), cells, weights, false);
}

WeightedComplex recession_fan(const WeightedComplex& x, std::size_t budget) {
  std::vector<Cell> cones;
  std::vector<Weight> weights;
  for (auto i : x.maximal()) {
    cones.push_back(x.cell(i).recession_cone());
    weights.push_back(x.weight(i));
  }
  auto [kept, kept_w] = keep_maximal(cones, weights);
  if (find_bad_intersection(kept)) {
    const Matrix hs = hyperplanes_of(kept);
    std::vector<Cell> pieces;
    std::vector<Weight> piece_w;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (auto& p : kept[i].refine(hs, budget)) {
        pieces.push_back(std::move(p));
        piece_w.push_back(kept_w[i]);
        if (pieces.size() > budget) throw ResourceLimit("refinement exceeded budget of " + std::to_string(budget));
      }
    }
    std::tie(kept, kept_w) = keep_maximal(pieces, piece_w);
  }
  return WeightedComplex::from_maximal_cells(x.n(), kept, kept_w, false);
}

WeightedComplex star_fan(const WeightedComplex& x, const TropPoint& p, std::size_t budget) {
  if (p.size() != x.n()) throw InvalidInput("point has wrong size");
  const Vec r = p.reduced();
  std::vector<Cell> cones;
  std::vector<Weight> weights;
  bool lineality = false;
  for (auto i : x.maximal()) {
    if (!x.cell(i).contains(r)) continue;
    cones.push_back(x.cell(i).cone_at(r));
    weights.push_back(x.weight(i));
    lineality |= !cones.back().lineality().empty();
  }
  if (cones.empty()) throw InvalidInput("point " + to_string(p.coords()) + " is outside the support");
  WeightedComplex star = WeightedComplex::from_maximal_cells(x.n(), cones, weights, false);
  if (!lineality) return star;
  return refine(star, braid_hyperplanes(x.n()), budget);
}

Cell chain_cone(std::size_t n, const Chain& chain) {
  Matrix rays;
  for (const auto& f : chain) {
    if (f.size() != n) rays.push_back(bergman_ray(n, f));
  }
  return Cell::cone(n - 1, rays);
}

WeightedComplex chain_fan(const ChainFamily& f) {
  std::vector<Cell> cones;
  for (const auto& c : f.maximal_chains()) cones.push_back(chain_cone(f.size(), c));
  return WeightedComplex::from_maximal_cells(f.size(), cones, std::vector<Weight>(cones.size(), 1), false);
}

ChainCone chn_cell_of(const TropPoint& x) {
  const Partition part = partition(Rational(-1) * x);
  ChainCone out;
  ElementSet acc;
  for (std::size_t j = 0; j < part.blocks.size(); ++j) {
    acc = acc | part.blocks[j];
    out.chain.push_back(acc);
    if (j + 1 < part.blocks.size()) out.coefficients.push_back(part.values[j] - part.values[j + 1]);
  }
  return out;
}

SegmentCoverage segment_in_support(const WeightedComplex& x, const TropPoint& a, const TropPoint& b) {
  if (a.size() != x.n() || b.size() != x.n()) throw InvalidInput("point has wrong size");
  const std::vector<TropPoint> pts = segment(a, b);
  SegmentCoverage out;
  auto fail = [&](std::size_t piece, const Rational& t, const Vec& p, const Vec& q) {
    out.covered = false;
    out.piece = piece;
    out.parameter = t;
    out.gap = TropPoint::from_reduced(linalg::axpy(p, t, linalg::sub(q, p)));
    return out;
  };
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const Vec p = pts[k].reduced();
    const Vec q = k + 1 < pts.size() ? pts[k + 1].reduced() : p;
    if (k + 1 == pts.size() && k > 0) break;
    std::vector<std::pair<Rational, Rational>> spans;
    for (auto i : x.maximal()) {
      if (auto iv = parameter_interval(x.cell(i), p, q)) spans.push_back(*iv);
    }
    std::sort(spans.begin(), spans.end());
    if (spans.empty() || sgn(spans.front().first) > 0) return fail(k, 0, p, q);
    Rational reach = spans.front().second;
    for (const auto& [lo, hi] : spans) {
      if (lo > reach) return fail(k, (reach + lo) / 2, p, q);
      reach = std::max(reach, hi);
    }
    if (reach < 1) return fail(k, (reach + 1) / 2, p, q);
  }
  return out;
}

}  // namespace tropcvx
