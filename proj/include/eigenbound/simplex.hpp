#pragma once

// Dense two-phase primal simplex with bounded variables, for the small
// linear programs used by the variational oracle.

#include <limits>
#include <vector>

namespace eigenbound::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Relation { less_equal, equal, greater_equal };

struct Constraint {
  std::vector<double> coeffs;
  Relation relation = Relation::equal;
  double rhs = 0;
};

/// minimize cost^T x  subject to  constraints,  0 <= x_j <= upper_j.
struct LinearProgram {
  std::vector<double> cost;
  std::vector<double> upper;  // kInfinity for unbounded above; empty means all unbounded
  std::vector<Constraint> constraints;
};

enum class Status { optimal, infeasible, unbounded, iteration_limit };

const char* to_string(Status status);

struct Solution {
  Status status = Status::infeasible;
  double objective = 0;
  std::vector<double> x;
  int iterations = 0;
};

struct Options {
  int max_iterations = 100000;
  double tolerance = 1e-9;
};

Solution solve(const LinearProgram& program, const Options& options = {});

}  // namespace eigenbound::lp
