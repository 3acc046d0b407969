#include "eigenbound/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eigenbound::lp {

const char* to_string(Status status)
{
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

namespace {

enum class VarState { basic, at_lower, at_upper, fixed };

// Tableau B^{-1} A with explicit basic values. Nonbasic variables sit at one
// of their bounds.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows * cols, 0.0), xb_(rows, 0.0), basis_(rows, 0),
        state_(cols, VarState::at_lower), upper_(cols, kInfinity)
  {
  }

  double& at(std::size_t i, std::size_t j) { return t_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * cols_ + j]; }

  // Returns optimal, unbounded or iteration_limit for the given cost vector.
  Status optimize(const std::vector<double>& cost, const Options& opt, int& iterations)
  {
    const double cost_scale = std::max(1.0, max_abs(cost));
    const double dj_tol = opt.tolerance * cost_scale;
    const double pivot_tol = 1e-11;
    int degenerate_streak = 0;
    std::vector<double> reduced(cols_);

    while (true) {
      if (iterations >= opt.max_iterations) return Status::iteration_limit;
      ++iterations;

      // Reduced costs d_j = c_j - c_B^T T_j.
      for (std::size_t j = 0; j < cols_; ++j) reduced[j] = cost[j];
      for (std::size_t i = 0; i < rows_; ++i) {
        const double cb = cost[basis_[i]];
        if (cb == 0) continue;
        const double* row = &t_[i * cols_];
        for (std::size_t j = 0; j < cols_; ++j) reduced[j] -= cb * row[j];
      }

      const bool bland = degenerate_streak > 50;
      std::size_t entering = cols_;
      double best = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        double violation = 0;
        if (state_[j] == VarState::at_lower && reduced[j] < -dj_tol) violation = -reduced[j];
        else if (state_[j] == VarState::at_upper && reduced[j] > dj_tol) violation = reduced[j];
        if (violation <= 0) continue;
        if (bland) {
          entering = j;
          break;
        }
        if (violation > best) {
          best = violation;
          entering = j;
        }
      }
      if (entering == cols_) return Status::optimal;

      const double dir = state_[entering] == VarState::at_lower ? 1.0 : -1.0;
      double theta = upper_[entering];  // bound flip distance
      std::size_t leaving_row = rows_;
      bool leaves_at_upper = false;
      double leaving_alpha = 0;
      for (std::size_t i = 0; i < rows_; ++i) {
        const double alpha = dir * at(i, entering);
        double limit;
        bool to_upper;
        if (alpha > pivot_tol) {
          limit = xb_[i] / alpha;
          to_upper = false;
        } else if (alpha < -pivot_tol && std::isfinite(upper_[basis_[i]])) {
          limit = (upper_[basis_[i]] - xb_[i]) / -alpha;
          to_upper = true;
        } else {
          continue;
        }
        limit = std::max(limit, 0.0);
        const bool better =
            limit < theta ||
            (limit == theta && leaving_row != rows_ &&
             (bland ? basis_[i] < basis_[leaving_row] : std::abs(alpha) > std::abs(leaving_alpha)));
        if (better) {
          theta = limit;
          leaving_row = i;
          leaves_at_upper = to_upper;
          leaving_alpha = alpha;
        }
      }
      if (!std::isfinite(theta)) return Status::unbounded;

      degenerate_streak = theta <= 1e-14 ? degenerate_streak + 1 : 0;

      for (std::size_t i = 0; i < rows_; ++i) xb_[i] -= dir * theta * at(i, entering);

      if (leaving_row == rows_) {
        state_[entering] = dir > 0 ? VarState::at_upper : VarState::at_lower;
        continue;
      }

      const double entering_value = dir > 0 ? theta : upper_[entering] - theta;
      state_[basis_[leaving_row]] = leaves_at_upper ? VarState::at_upper : VarState::at_lower;
      pivot(leaving_row, entering);
      xb_[leaving_row] = entering_value;
    }
  }

  void pivot(std::size_t r, std::size_t j)
  {
    const double p = at(r, j);
    double* prow = &t_[r * cols_];
    for (std::size_t k = 0; k < cols_; ++k) prow[k] /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, j);
      if (f == 0) continue;
      double* row = &t_[i * cols_];
      for (std::size_t k = 0; k < cols_; ++k) row[k] -= f * prow[k];
      row[j] = 0;
    }
    prow[j] = 1;
    basis_[r] = j;
    state_[j] = VarState::basic;
  }

  double value(std::size_t j) const
  {
    switch (state_[j]) {
      case VarState::basic:
        for (std::size_t i = 0; i < rows_; ++i)
          if (basis_[i] == j) return xb_[i];
        return 0;
      case VarState::at_upper: return upper_[j];
      default: return 0;
    }
  }

  static double max_abs(const std::vector<double>& v)
  {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }

  std::size_t rows_, cols_;
  std::vector<double> t_;
  std::vector<double> xb_;
  std::vector<std::size_t> basis_;
  std::vector<VarState> state_;
  std::vector<double> upper_;
};

}  // namespace

Solution solve(const LinearProgram& program, const Options& options)
{
  const std::size_t n = program.cost.size();
  const std::size_t m = program.constraints.size();
  if (!program.upper.empty() && program.upper.size() != n)
    throw std::invalid_argument("upper bound vector has the wrong length");
  for (const auto& c : program.constraints)
    if (c.coeffs.size() != n) throw std::invalid_argument("constraint has the wrong number of coefficients");

  std::size_t slacks = 0;
  for (const auto& c : program.constraints)
    if (c.relation != Relation::equal) ++slacks;
  const std::size_t first_artificial = n + slacks;
  const std::size_t cols = first_artificial + m;

  Tableau tab(m, cols);
  for (std::size_t j = 0; j < n; ++j) {
    const double u = program.upper.empty() ? kInfinity : program.upper[j];
    if (u < 0) {
      Solution s;
      s.status = Status::infeasible;
      return s;
    }
    tab.upper_[j] = u;
  }

  double rhs_scale = 1;
  std::size_t slack = n;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = program.constraints[i];
    const double sign = c.rhs < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = sign * c.coeffs[j];
    if (c.relation == Relation::less_equal) tab.at(i, slack++) = sign;
    if (c.relation == Relation::greater_equal) tab.at(i, slack++) = -sign;
    tab.at(i, first_artificial + i) = 1;
    tab.basis_[i] = first_artificial + i;
    tab.state_[first_artificial + i] = VarState::basic;
    tab.xb_[i] = sign * c.rhs;
    rhs_scale = std::max(rhs_scale, std::abs(c.rhs));
  }

  Solution result;

  // Phase I: drive the artificials to zero.
  std::vector<double> phase_cost(cols, 0.0);
  for (std::size_t i = 0; i < m; ++i) phase_cost[first_artificial + i] = 1;
  Status st = tab.optimize(phase_cost, options, result.iterations);
  if (st == Status::iteration_limit) {
    result.status = st;
    return result;
  }
  double infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) infeasibility += tab.value(first_artificial + i);
  if (infeasibility > 1e-9 * rhs_scale) {
    result.status = Status::infeasible;
    return result;
  }

  // Fix the artificials at zero and pivot the basic ones out where possible.
  for (std::size_t a = first_artificial; a < cols; ++a) {
    tab.upper_[a] = 0;
    if (tab.state_[a] != VarState::basic) tab.state_[a] = VarState::fixed;
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis_[r] < first_artificial) continue;
    for (std::size_t j = 0; j < first_artificial; ++j) {
      if (tab.state_[j] == VarState::basic || std::abs(tab.at(r, j)) <= 1e-9) continue;
      const std::size_t art = tab.basis_[r];
      const double entering_value = tab.value(j);
      tab.pivot(r, j);
      tab.xb_[r] = entering_value;
      tab.state_[art] = VarState::fixed;
      break;
    }
  }

  std::vector<double> cost(cols, 0.0);
  std::copy(program.cost.begin(), program.cost.end(), cost.begin());
  st = tab.optimize(cost, options, result.iterations);
  result.status = st;
  if (st != Status::optimal) return result;

  result.x.resize(n);
  result.objective = 0;
  for (std::size_t j = 0; j < n; ++j) {
    result.x[j] = tab.value(j);
    result.objective += program.cost[j] * result.x[j];
  }
  return result;
}

}  // namespace eigenbound::lp
