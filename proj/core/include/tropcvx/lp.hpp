#pragma once

// Exact rational linear programming: a dense two-phase simplex with Bland's
// rule, so it terminates without tolerances. All variables are free; bounds
// are ordinary constraints.

#include <cstddef>
#include <vector>

#include "tropcvx/rational.hpp"

namespace tropcvx::lp {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct Constraint {
  Vec coeffs;
  Relation relation;
  Rational rhs;
};

struct Problem {
  std::size_t num_vars = 0;
  std::vector<Constraint> constraints;

  void add(Vec coeffs, Relation rel, Rational rhs) { constraints.push_back({std::move(coeffs), rel, std::move(rhs)}); }
};

/// Feasibility verdict. On success `point` satisfies every constraint. On
/// failure `certificate` holds one multiplier per constraint (nonnegative for
/// inequalities, read against the <= orientation) whose combination of the
/// constraints is 0 <= negative.
struct Feasibility {
  bool feasible = false;
  Vec point;
  Vec certificate;
};

Feasibility lp_feasible(const Problem& problem);

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  Vec point;
  Rational value;
};

Solution maximize(const Problem& problem, const Vec& objective);
Solution minimize(const Problem& problem, const Vec& objective);

/// Independent check of an infeasibility certificate (see Feasibility).
bool verify_infeasibility_certificate(const Problem& problem, const Vec& certificate);

/// True iff `point` satisfies every constraint exactly.
bool satisfies(const Problem& problem, const Vec& point);

}  // namespace tropcvx::lp
