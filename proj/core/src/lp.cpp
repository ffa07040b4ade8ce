#include "tropcvx/lp.hpp"

#include <cassert>
#include <optional>

#include "tropcvx/errors.hpp"
#include "tropcvx/linalg.hpp"

namespace tropcvx::lp {

namespace {

// Dense tableau over nonnegative columns: split free variables, slacks, then
// one artificial per row.
class Tableau {
 public:
  explicit Tableau(const Problem& p) : num_orig_(p.num_vars) {
    const std::size_t m = p.constraints.size();
    std::size_t slacks = 0;
    for (const auto& c : p.constraints) {
      if (c.coeffs.size() != p.num_vars) throw InvalidInput("constraint width does not match variable count");
      if (c.relation != Relation::kEqual) ++slacks;
    }
    first_slack_ = 2 * num_orig_;
    first_art_ = first_slack_ + slacks;
    cols_ = first_art_ + m;
    rows_.assign(m, Vec(cols_ + 1, Rational(0)));
    basis_.resize(m);
    std::size_t s = first_slack_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = p.constraints[i];
      auto& row = rows_[i];
      for (std::size_t k = 0; k < num_orig_; ++k) {
        row[k] = c.coeffs[k];
        row[num_orig_ + k] = -c.coeffs[k];
      }
      if (c.relation == Relation::kLessEqual) row[s++] = 1;
      if (c.relation == Relation::kGreaterEqual) row[s++] = -1;
      row[cols_] = c.rhs;
      if (c.rhs < 0) {
        for (auto& x : row) x = -x;
      }
      row[first_art_ + i] = 1;
      basis_[i] = first_art_ + i;
    }
  }

  // Returns false when infeasible.
  bool phase_one() {
    Vec cost(cols_, Rational(0));
    for (std::size_t j = first_art_; j < cols_; ++j) cost[j] = -1;
    run(cost, cols_);
    Rational value = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] >= first_art_) value += rows_[i][cols_];
    }
    if (sgn(value) != 0) return false;
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_art_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    return true;
  }

  // Maximizes the original objective; false when unbounded.
  bool phase_two(const Vec& objective) {
    Vec cost(cols_, Rational(0));
    for (std::size_t k = 0; k < num_orig_; ++k) {
      cost[k] = objective[k];
      cost[num_orig_ + k] = -objective[k];
    }
    return run(cost, first_art_);
  }

  Vec point() const {
    Vec x(num_orig_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t b = basis_[i];
      if (b < num_orig_) x[b] += rows_[i][cols_];
      else if (b < 2 * num_orig_) x[b - num_orig_] -= rows_[i][cols_];
    }
    return x;
  }

 private:
  // Bland's rule: lowest-index improving column, lowest-index leaving variable
  // among ratio ties. Columns >= `limit` never enter.
  bool run(const Vec& cost, std::size_t limit) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit && !enter; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
          if (sgn(rows_[i][j]) != 0 && sgn(cost[basis_[i]]) != 0) reduced -= cost[basis_[i]] * rows_[i][j];
        }
        if (reduced > 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][*enter] <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) {
      if (sgn(x) != 0) x *= inv;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(rows_[r][j]) != 0) rows_[i][j] -= f * rows_[r][j];
      }
    }
    basis_[r] = c;
  }

  std::size_t num_orig_;
  std::size_t first_slack_ = 0;
  std::size_t first_art_ = 0;
  std::size_t cols_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> basis_;
};

// Each constraint rewritten as a . x <= b (inequalities) or a . x = b.
struct Normalized {
  Vec coeffs;
  Rational rhs;
  bool equality;
};

Normalized normalize(const Constraint& c) {
  if (c.relation == Relation::kGreaterEqual) return {linalg::scale(c.coeffs, -1), -c.rhs, false};
  return {c.coeffs, c.rhs, c.relation == Relation::kEqual};
}

bool feasible_point(const Problem& p, Vec* point) {
  Tableau t(p);
  if (!t.phase_one()) return false;
  if (point) *point = t.point();
  return true;
}

}  // namespace

bool satisfies(const Problem& problem, const Vec& point) {
  for (const auto& c : problem.constraints) {
    const Rational lhs = linalg::dot(c.coeffs, point);
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

Feasibility lp_feasible(const Problem& problem) {
  Feasibility f;
  if (feasible_point(problem, &f.point)) {
    f.feasible = true;
    return f;
  }
  // Farkas: find y (y_i >= 0 on inequalities) with y^T A = 0 and y^T b = -1.
  const std::size_t m = problem.constraints.size();
  Problem dual;
  dual.num_vars = m;
  std::vector<Normalized> rows;
  for (const auto& c : problem.constraints) rows.push_back(normalize(c));
  for (std::size_t k = 0; k < problem.num_vars; ++k) {
    Vec coeffs(m);
    for (std::size_t i = 0; i < m; ++i) coeffs[i] = rows[i].coeffs[k];
    dual.add(std::move(coeffs), Relation::kEqual, 0);
  }
  Vec rhs(m);
  for (std::size_t i = 0; i < m; ++i) rhs[i] = rows[i].rhs;
  dual.add(std::move(rhs), Relation::kEqual, -1);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].equality) dual.add(linalg::unit(m, i), Relation::kGreaterEqual, 0);
  }
  [[maybe_unused]] const bool ok = feasible_point(dual, &f.certificate);
  assert(ok);
  return f;
}

Solution maximize(const Problem& problem, const Vec& objective) {
  if (objective.size() != problem.num_vars) throw InvalidInput("objective width does not match variable count");
  Solution s;
  Tableau t(problem);
  if (!t.phase_one()) {
    s.status = Status::kInfeasible;
    return s;
  }
  if (!t.phase_two(objective)) {
    s.status = Status::kUnbounded;
    return s;
  }
  s.status = Status::kOptimal;
  s.point = t.point();
  s.value = linalg::dot(objective, s.point);
  return s;
}

Solution minimize(const Problem& problem, const Vec& objective) {
  Solution s = maximize(problem, linalg::scale(objective, -1));
  if (s.status == Status::kOptimal) s.value = -s.value;
  return s;
}

bool verify_infeasibility_certificate(const Problem& problem, const Vec& y) {
  if (y.size() != problem.constraints.size()) return false;
  Vec combo = linalg::zeros(problem.num_vars);
  Rational bound = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Normalized n = normalize(problem.constraints[i]);
    if (!n.equality && y[i] < 0) return false;
    combo = linalg::axpy(combo, y[i], n.coeffs);
    bound += y[i] * n.rhs;
  }
  return linalg::is_zero(combo) && bound < 0;
}

}  // namespace tropcvx::lp
