#include "tropcvx/cell.hpp"

#include <algorithm>

#include "tropcvx/double_description.hpp"
#include "tropcvx/errors.hpp"
#include "tropcvx/lp.hpp"

namespace tropcvx {

using linalg::Matrix;

namespace {

Vec homogenize(const Rational& x0, const Vec& x) {
  Vec h;
  h.reserve(x.size() + 1);
  h.push_back(x0);
  h.insert(h.end(), x.begin(), x.end());
  return h;
}

Vec dehomogenize(const Vec& h) { return Vec(h.begin() + 1, h.end()); }

void sort_unique(Matrix& m) {
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
}

std::string matrix_key(const Matrix& m) {
  std::string s;
  for (const auto& row : m) s += to_string(row);
  return s;
}

}  // namespace

Rational evaluate_affine(const Vec& hyperplane, const Vec& x) {
  Rational v = hyperplane[0];
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(hyperplane[i + 1]) != 0) v += hyperplane[i + 1] * x[i];
  }
  return v;
}

void Cell::build_from_homogeneous(const Matrix& rays, const Matrix& lineality, bool minimal) {
  const std::size_t hd = ambient_dim_ + 1;
  dd::ConeConstraints h = dd::constraints_from_generators(hd, rays, lineality);
  dd::ConeGenerators g;
  if (minimal) {
    g.rays = rays;
    g.lineality = lineality;
  } else {
    g = dd::generators_from_constraints(hd, h.facets, h.equations);
  }

  Matrix lin;
  for (const auto& l : g.lineality) lin.push_back(dehomogenize(l));
  const linalg::Echelon lin_basis = linalg::echelon(lin, ambient_dim_);
  lineality_ = lin_basis.rows;

  vertices_.clear();
  rays_.clear();
  for (const auto& r : g.rays) {
    if (sgn(r[0]) > 0) {
      vertices_.push_back(lin_basis.reduce(linalg::scale(dehomogenize(r), 1 / r[0])));
    } else {
      Vec d = primitive_integer(lin_basis.reduce(dehomogenize(r)));
      if (!linalg::is_zero(d)) rays_.push_back(std::move(d));
    }
  }
  if (vertices_.empty()) throw InvalidInput("polyhedron without a vertex");
  sort_unique(vertices_);
  sort_unique(rays_);

  // The face at infinity {x0 = 0} is not a face of the polyhedron.
  facets_.clear();
  for (const auto& a : h.facets) {
    const bool touches = std::any_of(vertices_.begin(), vertices_.end(),
                                     [&](const Vec& v) { return sgn(evaluate_affine(a, v)) == 0; });
    if (touches) facets_.push_back(a);
  }
  equations_ = h.equations;
  dim_ = ambient_dim_ - linalg::rank(equations_, hd);
  key_ = std::to_string(ambient_dim_) + "|V" + matrix_key(vertices_) + "|R" + matrix_key(rays_) + "|L" +
         matrix_key(lineality_);
}

Cell Cell::from_generators(std::size_t ambient_dim, const Matrix& vertices, const Matrix& rays,
                           const Matrix& lineality) {
  if (vertices.empty()) throw InvalidInput("a cell needs at least one vertex");
  Matrix hr;
  Matrix hl;
  for (const auto& v : vertices) {
    if (v.size() != ambient_dim) throw InvalidInput("vertex has wrong dimension");
    hr.push_back(homogenize(1, v));
  }
  for (const auto& r : rays) {
    if (r.size() != ambient_dim) throw InvalidInput("ray has wrong dimension");
    if (!linalg::is_zero(r)) hr.push_back(homogenize(0, r));
  }
  for (const auto& l : lineality) {
    if (l.size() != ambient_dim) throw InvalidInput("lineality vector has wrong dimension");
    if (!linalg::is_zero(l)) hl.push_back(homogenize(0, l));
  }
  Cell c;
  c.ambient_dim_ = ambient_dim;
  c.build_from_homogeneous(hr, hl, false);
  return c;
}

Cell Cell::cone(std::size_t ambient_dim, const Matrix& rays, const Matrix& lineality) {
  return from_generators(ambient_dim, {linalg::zeros(ambient_dim)}, rays, lineality);
}

Cell Cell::point(const Vec& x) { return from_generators(x.size(), {x}); }

Cell Cell::whole_space(std::size_t ambient_dim) {
  Matrix basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(linalg::unit(ambient_dim, i));
  return from_generators(ambient_dim, {linalg::zeros(ambient_dim)}, {}, basis);
}

std::optional<Cell> Cell::from_constraints(std::size_t ambient_dim, const Matrix& inequalities,
                                           const Matrix& equations) {
  const std::size_t hd = ambient_dim + 1;
  Matrix ineq = inequalities;
  ineq.push_back(linalg::unit(hd, 0));
  dd::ConeGenerators g = dd::generators_from_constraints(hd, ineq, equations);
  const bool has_vertex = std::any_of(g.rays.begin(), g.rays.end(), [](const Vec& r) { return sgn(r[0]) > 0; });
  if (!has_vertex) return std::nullopt;
  Cell c;
  c.ambient_dim_ = ambient_dim;
  c.build_from_homogeneous(g.rays, g.lineality, true);
  return c;
}

bool Cell::is_cone() const { return vertices_.size() == 1 && linalg::is_zero(vertices_.front()); }

bool Cell::contains(const Vec& x) const {
  if (x.size() != ambient_dim_) throw InvalidInput("point has wrong dimension");
  for (const auto& e : equations_) {
    if (sgn(evaluate_affine(e, x)) != 0) return false;
  }
  for (const auto& a : facets_) {
    if (sgn(evaluate_affine(a, x)) < 0) return false;
  }
  return true;
}

bool Cell::relint_contains(const Vec& x) const {
  if (!contains(x)) return false;
  for (const auto& a : facets_) {
    if (sgn(evaluate_affine(a, x)) == 0) return false;
  }
  return true;
}

bool Cell::contains_by_generators(const Vec& x) const {
  const std::size_t nv = vertices_.size();
  const std::size_t nr = rays_.size();
  const std::size_t nl = lineality_.size();
  lp::Problem p;
  p.num_vars = nv + nr + nl;
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    Vec row(p.num_vars);
    for (std::size_t k = 0; k < nv; ++k) row[k] = vertices_[k][i];
    for (std::size_t k = 0; k < nr; ++k) row[nv + k] = rays_[k][i];
    for (std::size_t k = 0; k < nl; ++k) row[nv + nr + k] = lineality_[k][i];
    p.add(std::move(row), lp::Relation::kEqual, x[i]);
  }
  Vec convex(p.num_vars);
  for (std::size_t k = 0; k < nv; ++k) convex[k] = 1;
  p.add(std::move(convex), lp::Relation::kEqual, 1);
  for (std::size_t k = 0; k < nv + nr; ++k) p.add(linalg::unit(p.num_vars, k), lp::Relation::kGreaterEqual, 0);
  return lp::lp_feasible(p).feasible;
}

bool Cell::contains_cell(const Cell& other) const {
  for (const auto& v : other.vertices_) {
    if (!contains(v)) return false;
  }
  // Directions must satisfy the homogeneous parts of the constraints.
  auto direction_ok = [&](const Vec& d, bool both_signs) {
    for (const auto& e : equations_) {
      if (sgn(evaluate_affine(e, d) - e[0]) != 0) return false;
    }
    for (const auto& a : facets_) {
      const int s = sgn(evaluate_affine(a, d) - a[0]);
      if (s < 0 || (both_signs && s != 0)) return false;
    }
    return true;
  };
  for (const auto& r : other.rays_) {
    if (!direction_ok(r, false)) return false;
  }
  for (const auto& l : other.lineality_) {
    if (!direction_ok(l, true)) return false;
  }
  return true;
}

std::vector<Cell> Cell::facets() const {
  std::vector<Cell> out;
  for (const auto& a : facets_) {
    Matrix vs;
    Matrix rs;
    for (const auto& v : vertices_) {
      if (sgn(evaluate_affine(a, v)) == 0) vs.push_back(v);
    }
    for (const auto& r : rays_) {
      if (sgn(evaluate_affine(a, r) - a[0]) == 0) rs.push_back(r);
    }
    out.push_back(from_generators(ambient_dim_, vs, rs, lineality_));
  }
  return out;
}

Matrix Cell::direction_basis() const {
  Matrix gens;
  for (std::size_t i = 1; i < vertices_.size(); ++i) gens.push_back(linalg::sub(vertices_[i], vertices_[0]));
  gens.insert(gens.end(), rays_.begin(), rays_.end());
  gens.insert(gens.end(), lineality_.begin(), lineality_.end());
  return linalg::echelon(gens, ambient_dim_).rows;
}

Cell Cell::recession_cone() const { return cone(ambient_dim_, rays_, lineality_); }

Cell Cell::translated(const Vec& t) const {
  Matrix vs;
  for (const auto& v : vertices_) vs.push_back(linalg::add(v, t));
  return from_generators(ambient_dim_, vs, rays_, lineality_);
}

Cell Cell::cone_at(const Vec& p) const {
  Matrix rs;
  for (const auto& v : vertices_) rs.push_back(linalg::sub(v, p));
  rs.insert(rs.end(), rays_.begin(), rays_.end());
  return cone(ambient_dim_, rs, lineality_);
}

Vec Cell::interior_point() const {
  Vec x = linalg::zeros(ambient_dim_);
  for (const auto& v : vertices_) x = linalg::add(x, v);
  x = linalg::scale(x, 1 / Rational(static_cast<long>(vertices_.size())));
  for (const auto& r : rays_) x = linalg::add(x, r);
  return x;
}

int Cell::sign_on(const Vec& h) const {
  bool pos = false;
  bool neg = false;
  for (const auto& v : vertices_) {
    const int s = sgn(evaluate_affine(h, v));
    pos |= s > 0;
    neg |= s < 0;
  }
  for (const auto& r : rays_) {
    const int s = sgn(evaluate_affine(h, r) - h[0]);
    pos |= s > 0;
    neg |= s < 0;
  }
  for (const auto& l : lineality_) {
    if (sgn(evaluate_affine(h, l) - h[0]) != 0) return 2;
  }
  if (pos && neg) return 2;
  if (pos) return 1;
  if (neg) return -1;
  return 0;
}

Vec Cell::generic_point(const Matrix& hyperplanes) const {
  Matrix crossing;
  for (const auto& h : hyperplanes) {
    if (!in_hyperplane(h)) crossing.push_back(h);
  }
  // Weights t^k along a moment curve: each hyperplane vanishes for finitely
  // many t, so the scan terminates.
  for (unsigned long t = 1;; ++t) {
    Rational w = 1;
    Rational total = 0;
    Vec x = linalg::zeros(ambient_dim_);
    for (const auto& v : vertices_) {
      x = linalg::axpy(x, w, v);
      total += w;
      w *= t;
    }
    x = linalg::scale(x, 1 / total);
    for (const auto& r : rays_) {
      x = linalg::axpy(x, w, r);
      w *= t;
    }
    for (const auto& l : lineality_) {
      x = linalg::axpy(x, w, l);
      w *= t;
    }
    const bool ok = std::none_of(crossing.begin(), crossing.end(),
                                 [&](const Vec& h) { return sgn(evaluate_affine(h, x)) == 0; });
    if (ok) return x;
  }
}

std::optional<Cell> Cell::intersect(const Matrix& inequalities, const Matrix& equations) const {
  Matrix ineq = facets_;
  ineq.insert(ineq.end(), inequalities.begin(), inequalities.end());
  Matrix eq = equations_;
  eq.insert(eq.end(), equations.begin(), equations.end());
  return from_constraints(ambient_dim_, ineq, eq);
}

std::vector<Cell> Cell::refine(const Matrix& hyperplanes, std::size_t budget) const {
  std::vector<Cell> pieces{*this};
  for (const auto& h : hyperplanes) {
    std::vector<Cell> next;
    for (auto& piece : pieces) {
      if (piece.sign_on(h) != 2) {
        next.push_back(std::move(piece));
        continue;
      }
      for (const Vec& side : {h, linalg::scale(h, -1)}) {
        auto part = piece.intersect({side});
        if (part && part->dim() == dim_) next.push_back(std::move(*part));
      }
      if (next.size() > budget) throw ResourceLimit("refinement exceeded budget of " + std::to_string(budget) + " pieces");
    }
    pieces = std::move(next);
  }
  return pieces;
}

}  // namespace tropcvx
