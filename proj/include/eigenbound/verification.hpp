#pragma once

// Independent oracles for the bounds: exact box spectra, numerical
// quadrature of the minimizing profile, a discretized linear program for the
// variational problem, and a discrete rearrangement check.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eigenbound/geometry.hpp"
#include "eigenbound/minimizer.hpp"
#include "eigenbound/operator_bounds.hpp"

namespace eigenbound {

enum class SpectrumSource { exact_box, external };

struct SpectrumSample {
  std::vector<double> eigenvalues;  // nondecreasing, positive
  OperatorKind op = OperatorKind::dirichlet_laplacian;
  SpectrumSource source = SpectrumSource::exact_box;
};

void validate(const SpectrumSample& sample);

struct BoxSpectrumOptions {
  unsigned workers = 1;
  std::size_t budget = 50'000'000;  // max lattice points held at once
};

/// First m Dirichlet Laplacian eigenvalues pi^2 sum k_i^2 / a_i^2 of the box
/// with the given sides, with multiplicity. Throws std::runtime_error when
/// the enumeration budget is exceeded.
SpectrumSample box_spectrum(const std::vector<double>& sides, std::size_t m,
                            const BoxSpectrumOptions& options = {});

/// Reads eigenvalues from CSV text: first field of each line, an optional
/// non-numeric header line, blank lines ignored. The result is sorted.
SpectrumSample read_spectrum_csv(std::istream& in, OperatorKind op);

/// Adaptive Gauss-Kronrod quadrature of r^gamma * profile(r) over its support.
double quadrature_moment(const MinimizerProfile<double>& profile, double gamma);

struct LpOracleResult {
  double objective = 0;
  std::vector<double> radii;    // midpoints
  std::vector<double> profile;  // optimal F_i
  int iterations = 0;
};

/// Discretized radial problem on a uniform midpoint grid of [0, r_max].
/// Throws std::domain_error if the mass cannot be reached under the
/// constraints (infeasible discretization).
LpOracleResult lp_minimize(int n, double M, double L, double m, int grid_points, double r_max);

/// r_max used when the caller does not pick one: 1.25 times the support of
/// the exact minimizer.
double default_lp_radius(const MinimizationInput& in);

/// Samples on a centred nx-by-ny grid; cell (ix, iy) has centre
/// ((ix - (nx-1)/2) cell, (iy - (ny-1)/2) cell) and value values[iy*nx + ix].
struct SampleGrid {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double cell = 1;
  std::vector<double> values;
};

/// Discrete symmetric-decreasing rearrangement: the same multiset of values
/// reassigned so that larger values sit on cells closer to the origin.
SampleGrid symmetric_decreasing_rearrangement(const SampleGrid& grid);

struct RearrangementCheck {
  double raw = 0;         // sum |xi|^2 F cell^2
  double rearranged = 0;  // same for the rearrangement
  bool ok = false;
};

RearrangementCheck rearrangement_moment_check(const SampleGrid& grid);

struct AuditRow {
  int m = 0;
  double spectrum_sum = 0;  // NaN without a spectrum
  double liyau = 0;
  double exact = 0;
  double theorem_form = 0;  // NaN if unsupported
  double slack = 0;         // spectrum_sum - max(exact, theorem_form); NaN without a spectrum
  bool theorem_below_exact = false;
};

struct AuditViolation {
  int m = 0;
  std::string what;
};

struct AuditReport {
  OperatorKind op = OperatorKind::dirichlet_laplacian;
  bool has_spectrum = false;
  std::vector<AuditRow> rows;
  std::vector<AuditViolation> violations;
  double min_slack = 0;  // NaN without a spectrum
  int argmin_slack = 0;
  bool ok() const { return violations.empty(); }
};

struct AuditOptions {
  std::optional<SpectrumSample> spectrum;  // overrides the box lattice oracle
  unsigned workers = 1;
};

/// For m = 1..m_max checks
///   liyau <= exact, liyau <= theorem_form,
///   exact <= spectrum sum, theorem_form <= spectrum sum,
/// the last two only when a spectrum is available (external, or a box with
/// the Laplacian). Ordering of theorem_form against exact is recorded, not
/// asserted.
AuditReport audit(OperatorKind kind, const DomainShape& shape, int m_max,
                  const AuditOptions& options = {});

}  // namespace eigenbound
