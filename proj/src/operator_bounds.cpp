#include "eigenbound/operator_bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eigenbound {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Multiplicity factor in front of |Omega| in the cap M.
double cap_factor(OperatorKind kind, int n)
{
  return kind == OperatorKind::stokes ? static_cast<double>(n - 1) : 1.0;
}

// (n/48) for Laplace, ((n-1)/48) for Stokes: the sharp second-term
// coefficient in units of (|Omega|/I) m.
double second_term_factor(OperatorKind kind, int n)
{
  return (kind == OperatorKind::stokes ? n - 1 : n) / 48.0;
}

void require_spectral_kind(OperatorKind kind, const char* what)
{
  if (kind == OperatorKind::dirichlet_bilaplacian)
    throw std::domain_error(std::string(what) + " is defined for the Laplacian and Stokes operators only");
}

}  // namespace

std::string_view to_string(OperatorKind kind)
{
  switch (kind) {
    case OperatorKind::dirichlet_laplacian: return "laplace";
    case OperatorKind::stokes: return "stokes";
    case OperatorKind::dirichlet_bilaplacian: return "bilaplace";
  }
  return "unknown";
}

OperatorKind parse_operator(std::string_view text)
{
  if (text == "laplace" || text == "laplacian" || text == "dirichlet_laplacian")
    return OperatorKind::dirichlet_laplacian;
  if (text == "stokes") return OperatorKind::stokes;
  if (text == "bilaplace" || text == "bilaplacian" || text == "dirichlet_bilaplacian")
    return OperatorKind::dirichlet_bilaplacian;
  throw std::invalid_argument("unknown operator '" + std::string(text) + "'");
}

double inertia_lower_bound(int n, double volume)
{
  const auto dc = dimension_constants(n);
  const double nn = n;
  return nn * std::pow(volume, 1 + 2 / nn) / ((nn + 2) * std::pow(dc.omega, 2 / nn));
}

void validate(const GeometrySummary& geom)
{
  if (geom.n < 2) throw std::invalid_argument("geometry dimension must be >= 2");
  if (!(geom.volume > 0) || !std::isfinite(geom.volume))
    throw std::invalid_argument("geometry volume must be positive and finite");
  if (!(geom.inertia > 0) || !std::isfinite(geom.inertia))
    throw std::invalid_argument("geometry second moment must be positive and finite");
  const double floor = inertia_lower_bound(geom.n, geom.volume);
  if (geom.inertia < floor * (1 - 1e-12))
    throw std::invalid_argument("second moment " + std::to_string(geom.inertia) +
                                " is below the ball value " + std::to_string(floor));
}

ProfileConstants ml_constants(OperatorKind kind, const GeometrySummary& geom)
{
  validate(geom);
  const int n = geom.n;
  const double scale = std::pow(2 * kPi, -n);
  const double root = std::sqrt(geom.volume * geom.inertia);
  if (kind == OperatorKind::stokes) {
    return {scale * (n - 1) * geom.volume, 2 * scale * std::sqrt(double(n) * (n - 1)) * root};
  }
  return {scale * geom.volume, 2 * scale * root};
}

MinimizationInput minimization_input(OperatorKind kind, const GeometrySummary& geom, double m)
{
  const auto ml = ml_constants(kind, geom);
  return {geom.n, ml.M, ml.L, m};
}

double bound_liyau(OperatorKind kind, const GeometrySummary& geom, double m)
{
  require_spectral_kind(kind, "bound_liyau");
  validate(geom);
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  const int n = geom.n;
  const double nn = n;
  const auto dc = dimension_constants(n);
  const double base = std::pow(2 * kPi, nn) / (dc.omega * cap_factor(kind, n) * geom.volume);
  return nn / (nn + 2) * std::pow(base, 2 / nn) * std::pow(m, 1 + 2 / nn);
}

bool theorem_supported(OperatorKind kind, int n)
{
  if (kind == OperatorKind::dirichlet_bilaplacian) return n == 2;
  return n >= 2 && n <= 4;
}

double beta_theorem(OperatorKind kind, int n)
{
  if (!theorem_supported(kind, n))
    throw std::domain_error("no published beta for " + std::string(to_string(kind)) +
                            " in dimension " + std::to_string(n));
  const bool stokes = kind == OperatorKind::stokes;
  switch (n) {
    case 2:
      if (kind == OperatorKind::dirichlet_bilaplacian) return 12095.0 / 12096.0;
      return stokes ? 239.0 / 240.0 : 119.0 / 120.0;
    case 3: return 0.986;
    case 4: return stokes ? 0.978 : 0.983;
  }
  return kNaN;
}

double beta_lemma(OperatorKind kind, int n)
{
  if (!theorem_supported(kind, n))
    throw std::domain_error("no beta for " + std::string(to_string(kind)) + " in dimension " +
                            std::to_string(n));
  if (n == 2) return beta_theorem(kind, n);
  const double m0 = m_star_floor(kind, n);
  if (n == 3) {
    // sigma(m*) > (3 2^{2/3}/8) m*^{5/3} + (5/8) m* - (11 2^{1/3}/48) m*^{1/3}
    const double alpha = 11 * std::cbrt(2.0) / 48 * std::pow(m0, -2.0 / 3.0);
    return 1 - 8 * alpha / 5;
  }
  // n == 4: sigma(m*) > (7 sqrt5/25) m*^{3/2} + (7/10) m* - (49 sqrt5/200) m*^{1/2}
  const double alpha = 49 * std::sqrt(5.0) / 200 / std::sqrt(m0);
  return 1 - 10 * alpha / 7;
}

double bound_theorem_234(OperatorKind kind, const GeometrySummary& geom, double m,
                         bool lemma_constants)
{
  validate(geom);
  if (!theorem_supported(kind, geom.n))
    throw std::domain_error("two-term theorem bound is not available for " +
                            std::string(to_string(kind)) + " in dimension " +
                            std::to_string(geom.n));
  if (kind == OperatorKind::dirichlet_bilaplacian) {
    const double beta = lemma_constants ? 1 - 1 / (7.0 * 27 * 64 * m * m) : beta_theorem(kind, 2);
    return 16 * kPi * kPi / (3 * geom.volume * geom.volume) * m * m * m +
           kPi / (3 * geom.inertia) * beta * m * m;
  }
  const double beta = lemma_constants ? beta_lemma(kind, geom.n) : beta_theorem(kind, geom.n);
  return bound_liyau(kind, geom, m) +
         second_term_factor(kind, geom.n) * beta * geom.volume / geom.inertia * m;
}

BoundReport bound_exact(OperatorKind kind, const GeometrySummary& geom, double m)
{
  const auto in = minimization_input(kind, geom, m);
  BoundReport r;
  r.op = kind;
  r.n = geom.n;
  r.m = m;
  r.m_star = scaled_mass(in);
  r.theorem_form = theorem_supported(kind, geom.n) ? bound_theorem_234(kind, geom, m) : kNaN;

  if (kind == OperatorKind::dirichlet_bilaplacian) {
    r.liyau = sigma4_leading(in);
    r.melas = kNaN;
    r.exact = sigma4_exact(in);
    r.asymptotic = geom.n == 2 ? sigma24_closed_form(in.M, in.L, in.m) : kNaN;
    r.epsilon = kNaN;
    r.degenerate = r.m_star < 1;
    return r;
  }

  const auto d = sigma_decomposition(in);
  r.liyau = d.liyau;
  r.melas = sigma_melas_lb(in);
  r.exact = d.exact;
  r.asymptotic = sigma_asymptotic(in);
  r.epsilon = (d.third - d.excess) / d.second;  // (second - gap) / second, without the cancellation
  r.degenerate = d.degenerate;
  return r;
}

double m_star_floor(OperatorKind kind, int n)
{
  require_spectral_kind(kind, "m_star_floor");
  const auto dc = dimension_constants(n);
  const double nn = n;
  const double base = (nn + 1) * std::pow(4 * kPi, nn) / (dc.omega * dc.omega);
  if (kind == OperatorKind::stokes)
    return base / (nn - 1) * std::pow(nn * nn / ((nn - 1) * (nn + 2)), nn / 2);
  return base * std::pow(nn / (nn + 2), nn / 2);
}

double weyl_asymptote(OperatorKind kind, const GeometrySummary& geom, double k)
{
  require_spectral_kind(kind, "weyl_asymptote");
  validate(geom);
  const double nn = geom.n;
  const auto dc = dimension_constants(geom.n);
  const double base = std::pow(2 * kPi, nn) / (dc.omega * cap_factor(kind, geom.n) * geom.volume);
  return std::pow(base * k, 2 / nn);
}

}  // namespace eigenbound
