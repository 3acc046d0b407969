#include "eigenbound/verification.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "eigenbound/simplex.hpp"

namespace eigenbound {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool close_below(double lower, double upper)
{
  return lower <= upper + 1e-12 * std::max(std::abs(lower), std::abs(upper));
}

// Collects every lattice value pi^2 sum k_i^2/a_i^2 <= limit with k_1 in the
// residue class `worker` mod `workers`.
class LatticeEnumerator {
 public:
  LatticeEnumerator(const std::vector<double>& weights, double limit, std::size_t budget,
                    std::atomic<std::size_t>& total)
      : w_(weights), limit_(limit), budget_(budget), total_(total), tail_min_(weights.size() + 1, 0.0)
  {
    for (std::size_t d = w_.size(); d-- > 0;) tail_min_[d] = tail_min_[d + 1] + w_[d];
  }

  bool run(unsigned worker, unsigned workers, std::vector<double>& out)
  {
    for (long k = 1 + worker;; k += workers) {
      const double v = w_[0] * double(k) * double(k);
      if (v + tail_min_[1] > limit_) break;
      if (!recurse(1, v, out)) return false;
    }
    return true;
  }

 private:
  bool recurse(std::size_t d, double partial, std::vector<double>& out)
  {
    if (d == w_.size()) {
      out.push_back(partial);
      return total_.fetch_add(1, std::memory_order_relaxed) < budget_;
    }
    for (long k = 1;; ++k) {
      const double v = partial + w_[d] * double(k) * double(k);
      if (v + tail_min_[d + 1] > limit_) break;
      if (!recurse(d + 1, v, out)) return false;
    }
    return true;
  }

  const std::vector<double>& w_;
  double limit_;
  std::size_t budget_;
  std::atomic<std::size_t>& total_;
  std::vector<double> tail_min_;
};

}  // namespace

void validate(const SpectrumSample& sample)
{
  for (std::size_t i = 0; i < sample.eigenvalues.size(); ++i) {
    const double v = sample.eigenvalues[i];
    if (!(v > 0) || !std::isfinite(v))
      throw std::invalid_argument("eigenvalue " + std::to_string(i + 1) + " is not positive");
    if (i > 0 && v < sample.eigenvalues[i - 1])
      throw std::invalid_argument("eigenvalues are not sorted at index " + std::to_string(i + 1));
  }
}

SpectrumSample box_spectrum(const std::vector<double>& sides, std::size_t m,
                            const BoxSpectrumOptions& options)
{
  if (sides.size() < 2) throw std::invalid_argument("box_spectrum needs at least 2 sides");
  if (m < 1) throw std::invalid_argument("box_spectrum needs m >= 1");
  for (double a : sides)
    if (!(a > 0)) throw std::invalid_argument("box sides must be positive");

  const double pi2 = std::numbers::pi * std::numbers::pi;
  std::vector<double> weights;
  double vol = 1;
  for (double a : sides) {
    weights.push_back(pi2 / (a * a));
    vol *= a;
  }
  const int n = int(sides.size());
  const double omega = dimension_constants(n).omega;
  const double first = std::accumulate(weights.begin(), weights.end(), 0.0);

  // Weyl estimate of the m-th eigenvalue with a safety factor, doubled until
  // at least m lattice values lie below it.
  double limit = 1.5 * 4 * pi2 * std::pow(double(m) / (omega * vol), 2.0 / n);
  limit = std::max(limit, first * (1 + 1e-12));
  const unsigned workers = std::max(1u, options.workers);

  for (;;) {
    std::atomic<std::size_t> total{0};
    std::vector<std::vector<double>> parts(workers);
    std::vector<char> ok(workers, 1);
    LatticeEnumerator enumerator(weights, limit, options.budget, total);
    if (workers == 1) {
      ok[0] = enumerator.run(0, 1, parts[0]);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] { ok[w] = enumerator.run(w, workers, parts[w]); });
      for (auto& th : pool) th.join();
    }
    if (std::find(ok.begin(), ok.end(), 0) != ok.end())
      throw std::runtime_error("box_spectrum: enumeration budget of " +
                               std::to_string(options.budget) + " lattice points exceeded");

    std::vector<double> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    if (all.size() >= m) {
      std::sort(all.begin(), all.end());
      all.resize(m);
      return {std::move(all), OperatorKind::dirichlet_laplacian, SpectrumSource::exact_box};
    }
    limit *= 2;
  }
}

SpectrumSample read_spectrum_csv(std::istream& in, OperatorKind op)
{
  SpectrumSample sample;
  sample.op = op;
  sample.source = SpectrumSource::external;
  std::string line;
  int line_no = 0;
  bool seen_value = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comma = line.find(',');
    std::string field = line.substr(0, comma);
    field.erase(0, field.find_first_not_of(" \t\r"));
    field.erase(field.find_last_not_of(" \t\r") + 1);
    if (field.empty()) continue;
    std::istringstream ss(field);
    double v;
    if (!(ss >> v) || !ss.eof()) {
      if (!seen_value && line_no == 1) continue;  // header
      throw std::invalid_argument("spectrum line " + std::to_string(line_no) +
                                  ": cannot parse '" + field + "'");
    }
    seen_value = true;
    sample.eigenvalues.push_back(v);
  }
  std::sort(sample.eigenvalues.begin(), sample.eigenvalues.end());
  validate(sample);
  return sample;
}

double quadrature_moment(const MinimizerProfile<double>& profile, double gamma)
{
  using boost::math::quadrature::gauss_kronrod;
  auto f = [&](double r) { return std::pow(r, gamma) * profile(r); };
  const double knee = profile.plateau_end();
  const double end = profile.support();
  double total = 0;
  if (knee > 0) total += gauss_kronrod<double, 31>::integrate(f, 0.0, knee, 20, 1e-13);
  total += gauss_kronrod<double, 31>::integrate(f, knee, end, 20, 1e-13);
  return total;
}

double default_lp_radius(const MinimizationInput& in)
{
  return 1.25 * minimizer_profile(in).support();
}

// The LP is posed on the decrements d_i = F_i - F_{i+1} (F_N = 0), so that
// monotonicity and the slope bound become simple bounds 0 <= d_i <= L dr and
// only two general rows remain: F_0 = sum d_i <= M and the mass equation.
LpOracleResult lp_minimize(int n, double M, double L, double m, int grid_points, double r_max)
{
  validate(MinimizationInput{n, M, L, m});
  if (grid_points < 50) throw std::invalid_argument("lp_minimize needs at least 50 grid points");
  if (!(r_max > 0)) throw std::invalid_argument("lp_minimize needs r_max > 0");

  const auto dc = dimension_constants(n);
  const std::size_t N = static_cast<std::size_t>(grid_points);
  const double dr = r_max / double(N);

  LpOracleResult result;
  result.radii.resize(N);
  std::vector<double> mass_weight(N), cost_weight(N);
  double mass_acc = 0, cost_acc = 0;
  for (std::size_t i = 0; i < N; ++i) {
    const double r = (double(i) + 0.5) * dr;
    result.radii[i] = r;
    mass_acc += dc.sigma * std::pow(r, n - 1) * dr;
    cost_acc += dc.sigma * std::pow(r, n + 1) * dr;
    mass_weight[i] = mass_acc;  // coefficient of d_i: sum_{k <= i} w_k
    cost_weight[i] = cost_acc;
  }

  lp::LinearProgram program;
  program.cost = cost_weight;
  program.upper.assign(N, L * dr);
  program.constraints.push_back({std::vector<double>(N, 1.0), lp::Relation::less_equal, M});
  program.constraints.push_back({mass_weight, lp::Relation::equal, m});

  const auto sol = lp::solve(program);
  if (sol.status == lp::Status::infeasible)
    throw std::domain_error("lp_minimize: mass " + std::to_string(m) +
                            " is unreachable on [0, " + std::to_string(r_max) + "]");
  if (sol.status != lp::Status::optimal)
    throw std::runtime_error(std::string("lp_minimize: simplex ended with status ") +
                             lp::to_string(sol.status));

  result.objective = sol.objective;
  result.iterations = sol.iterations;
  result.profile.assign(N, 0.0);
  double acc = 0;
  for (std::size_t i = N; i-- > 0;) {
    acc += sol.x[i];
    result.profile[i] = acc;
  }
  return result;
}

SampleGrid symmetric_decreasing_rearrangement(const SampleGrid& grid)
{
  if (grid.values.size() != grid.nx * grid.ny)
    throw std::invalid_argument("sample grid has " + std::to_string(grid.values.size()) +
                                " values, expected nx*ny");
  const std::size_t count = grid.values.size();
  std::vector<double> radius2(count);
  const double cx = (double(grid.nx) - 1) / 2, cy = (double(grid.ny) - 1) / 2;
  for (std::size_t iy = 0; iy < grid.ny; ++iy)
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const double x = (double(ix) - cx) * grid.cell, y = (double(iy) - cy) * grid.cell;
      radius2[iy * grid.nx + ix] = x * x + y * y;
    }
  std::vector<std::size_t> cells(count);
  std::iota(cells.begin(), cells.end(), 0);
  std::stable_sort(cells.begin(), cells.end(),
                   [&](std::size_t a, std::size_t b) { return radius2[a] < radius2[b]; });
  std::vector<double> sorted = grid.values;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  SampleGrid out = grid;
  for (std::size_t k = 0; k < count; ++k) out.values[cells[k]] = sorted[k];
  return out;
}

RearrangementCheck rearrangement_moment_check(const SampleGrid& grid)
{
  for (double v : grid.values)
    if (!(v >= 0) || !std::isfinite(v))
      throw std::invalid_argument("rearrangement check needs finite nonnegative samples");
  const SampleGrid star = symmetric_decreasing_rearrangement(grid);
  const double cx = (double(grid.nx) - 1) / 2, cy = (double(grid.ny) - 1) / 2;
  const double area = grid.cell * grid.cell;
  RearrangementCheck check;
  double scale = 0;
  for (std::size_t iy = 0; iy < grid.ny; ++iy)
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const double x = (double(ix) - cx) * grid.cell, y = (double(iy) - cy) * grid.cell;
      const double r2 = x * x + y * y;
      const std::size_t k = iy * grid.nx + ix;
      check.raw += r2 * grid.values[k] * area;
      check.rearranged += r2 * star.values[k] * area;
      scale += (r2 + area) * grid.values[k] * area;
    }
  check.ok = check.raw >= check.rearranged - 1e-12 * scale;
  return check;
}

AuditReport audit(OperatorKind kind, const DomainShape& shape, int m_max, const AuditOptions& options)
{
  if (m_max < 1) throw std::invalid_argument("audit needs m_max >= 1");
  const GeometrySummary geom = summarize(shape);

  AuditReport report;
  report.op = kind;
  std::optional<SpectrumSample> spectrum = options.spectrum;
  if (!spectrum && kind == OperatorKind::dirichlet_laplacian) {
    if (const auto* box = std::get_if<Box>(&shape)) {
      BoxSpectrumOptions bso;
      bso.workers = options.workers;
      spectrum = box_spectrum(box->sides, std::size_t(m_max), bso);
    }
  }
  if (spectrum) {
    validate(*spectrum);
    if (spectrum->eigenvalues.size() < std::size_t(m_max))
      throw std::invalid_argument("spectrum has " + std::to_string(spectrum->eigenvalues.size()) +
                                  " eigenvalues, audit needs " + std::to_string(m_max));
    report.has_spectrum = true;
  }

  report.min_slack = report.has_spectrum ? std::numeric_limits<double>::infinity() : kNaN;
  double partial = 0;
  for (int m = 1; m <= m_max; ++m) {
    const BoundReport b = bound_exact(kind, geom, m);
    AuditRow row;
    row.m = m;
    row.liyau = b.liyau;
    row.exact = b.exact;
    row.theorem_form = b.theorem_form;
    const bool has_theorem = std::isfinite(b.theorem_form);
    row.theorem_below_exact = has_theorem && b.theorem_form <= b.exact;

    auto fail = [&](const std::string& what) { report.violations.push_back({m, what}); };
    if (!close_below(b.liyau, b.exact)) fail("liyau > exact");
    if (has_theorem && !close_below(b.liyau, b.theorem_form)) fail("liyau > theorem_form");

    if (report.has_spectrum) {
      partial += spectrum->eigenvalues[std::size_t(m - 1)];
      row.spectrum_sum = partial;
      if (!close_below(b.exact, partial)) fail("exact > spectrum sum");
      if (has_theorem && !close_below(b.theorem_form, partial)) fail("theorem_form > spectrum sum");
      row.slack = partial - (has_theorem ? std::max(b.exact, b.theorem_form) : b.exact);
      if (row.slack < report.min_slack) {
        report.min_slack = row.slack;
        report.argmin_slack = m;
      }
    } else {
      row.spectrum_sum = kNaN;
      row.slack = kNaN;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace eigenbound
