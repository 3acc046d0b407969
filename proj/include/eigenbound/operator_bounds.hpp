#pragma once

// Lower bounds for sums of the first m eigenvalues of the Dirichlet
// Laplacian, the Stokes operator and the Dirichlet bi-Laplacian, expressed
// through the minimization problem in minimizer.hpp.

#include <string>
#include <string_view>

#include "eigenbound/minimizer.hpp"

namespace eigenbound {

enum class OperatorKind { dirichlet_laplacian, stokes, dirichlet_bilaplacian };

std::string_view to_string(OperatorKind kind);
/// Accepts "laplace", "stokes", "bilaplace" (and the long enum names).
OperatorKind parse_operator(std::string_view text);

/// |Omega| and I = min_a int_Omega |x - a|^2 dx.
struct GeometrySummary {
  int n = 2;
  double volume = 0;
  double inertia = 0;
};

/// Smallest I permitted for a domain of the given volume (attained by balls).
double inertia_lower_bound(int n, double volume);

/// Throws std::invalid_argument unless n >= 2, volume > 0 and inertia respects
/// inertia_lower_bound up to a relative 1e-12.
void validate(const GeometrySummary& geom);

/// Cap M and slope bound L of the Fourier-side density.
struct ProfileConstants {
  double M = 0;
  double L = 0;
};

ProfileConstants ml_constants(OperatorKind kind, const GeometrySummary& geom);

MinimizationInput minimization_input(OperatorKind kind, const GeometrySummary& geom, double m);

/// Classical leading-order bound n/(n+2) ((2pi)^n/(omega_n c |Omega|))^{2/n} m^{1+2/n},
/// c = 1 (Laplacian) or n-1 (Stokes). Rejects the bi-Laplacian.
double bound_liyau(OperatorKind kind, const GeometrySummary& geom, double m);

struct BoundReport {
  OperatorKind op = OperatorKind::dirichlet_laplacian;
  int n = 2;
  double m = 0;
  double m_star = 0;
  double liyau = 0;
  double melas = 0;         // NaN for the bi-Laplacian
  double exact = 0;
  double asymptotic = 0;    // NaN where no expansion is available
  double theorem_form = 0;  // NaN outside the supported (operator, n) set
  double epsilon = 0;       // NaN for the bi-Laplacian
  bool degenerate = false;
};

/// All bounds for one (operator, geometry, m).
///
/// For Laplace/Stokes, epsilon is defined through
///   exact = liyau + (c/48)(|Omega|/I) m (1 - epsilon),  c = n or n-1,
/// and is evaluated from the cancellation-free decomposition of Sigma.
/// For the bi-Laplacian, liyau holds the moment-4 leading term, exact is the
/// moment-4 minimum, and asymptotic is the n = 2 closed form.
BoundReport bound_exact(OperatorKind kind, const GeometrySummary& geom, double m);

bool theorem_supported(OperatorKind kind, int n);

/// Published beta constants of the n = 2, 3, 4 two-term bounds.
double beta_theorem(OperatorKind kind, int n);

/// The sharper beta values produced by the per-dimension estimates, computed
/// from the m_star floors (n = 3, 4) or exactly (n = 2).
double beta_lemma(OperatorKind kind, int n);

/// Two-term bound with the published beta (Laplace/Stokes, n = 2, 3, 4) or
/// the n = 2 bi-Laplacian bound. Throws std::domain_error otherwise.
double bound_theorem_234(OperatorKind kind, const GeometrySummary& geom, double m,
                         bool lemma_constants = false);

/// Lower bound on m_star over all domains, for m >= 1.
double m_star_floor(OperatorKind kind, int n);

/// Leading-order asymptote of the k-th eigenvalue.
double weyl_asymptote(OperatorKind kind, const GeometrySummary& geom, double k);

}  // namespace eigenbound
