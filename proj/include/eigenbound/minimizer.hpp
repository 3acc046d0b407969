#pragma once

// Exact and asymptotic solution of the gradient-constrained radial moment
// minimization problem
//
//   minimize   sigma_n * int_0^inf r^{n+p-1} F(r) dr
//   subject to 0 <= F <= M,  -F' <= L,  sigma_n * int_0^inf r^{n-1} F(r) dr = m
//
// for moment powers p = 2 (Laplace / Stokes) and p = 4 (bi-Laplacian).
//
// Everything here is templated on the floating type so that the same code
// path can be evaluated in extended precision (e.g. Boost.Multiprecision)
// when an identity has to be resolved below double round-off.  The default
// type is double.

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace eigenbound {

template <class Real>
Real pi_value()
{
  using std::acos;
  return acos(Real(-1));
}

template <class Real>
Real int_pow(Real x, int k)
{
  Real result(1);
  while (k > 0) {
    if (k & 1) result *= x;
    x *= x;
    k >>= 1;
  }
  return result;
}

template <class Real = double>
struct DimensionConstants {
  int n;
  Real omega;  // volume of the unit ball
  Real sigma;  // area of the unit sphere, n * omega
};

/// Unit-ball volume and unit-sphere area in R^n, n >= 2.
///
/// Uses omega_n = (2 pi / n) omega_{n-2}, omega_0 = 1, omega_1 = 2, which is
/// exact in the number of pi factors and avoids tgamma.
template <class Real = double>
DimensionConstants<Real> dimension_constants(int n)
{
  if (n < 2) throw std::invalid_argument("dimension must be >= 2, got " + std::to_string(n));
  const Real two_pi = 2 * pi_value<Real>();
  Real omega = (n % 2 == 0) ? Real(1) : Real(2);
  for (int k = (n % 2 == 0) ? 2 : 3; k <= n; k += 2) omega *= two_pi / Real(k);
  return {n, omega, Real(n) * omega};
}

template <class Real>
struct BasicMinimizationInput {
  int n;
  Real M;  // cap on the profile
  Real L;  // bound on |F'|
  Real m;  // total mass
};

using MinimizationInput = BasicMinimizationInput<double>;

template <class Real>
void validate(const BasicMinimizationInput<Real>& in)
{
  if (in.n < 2) throw std::invalid_argument("dimension must be >= 2");
  if (!(in.M > 0)) throw std::invalid_argument("cap M must be positive");
  if (!(in.L > 0)) throw std::invalid_argument("slope bound L must be positive");
  if (!(in.m > 0)) throw std::invalid_argument("mass m must be positive");
}

enum class ProfileKind { plateau_ramp, triangular };

/// Radial minimizer. plateau_ramp: M on [0,s], M - L(r-s) on [s, s+M/L].
/// triangular: (h - L r)_+ with h <= M.
template <class Real = double>
struct MinimizerProfile {
  ProfileKind kind = ProfileKind::plateau_ramp;
  Real M{};
  Real L{};
  Real s{};  // plateau length
  Real t{};  // s * L / M
  Real h{};  // peak height of the triangular form

  Real peak() const { return kind == ProfileKind::plateau_ramp ? M : h; }
  Real plateau_end() const { return kind == ProfileKind::plateau_ramp ? s : Real(0); }
  Real support() const { return plateau_end() + peak() / L; }

  Real operator()(Real r) const
  {
    if (r < 0) r = -r;
    if (r <= plateau_end()) return peak();
    const Real v = peak() - L * (r - plateau_end());
    return v > 0 ? v : Real(0);
  }
};

/// (t+1)^k - t^k for t >= 0, evaluated in the centred variable eta = t + 1/2
/// as 2 * sum_{j odd} C(k,j) eta^{k-j} 2^{-j}.  All terms are positive, so
/// there is no cancellation for large t.
template <class Real>
Real power_difference(int k, Real t)
{
  if (k <= 0) return Real(0);
  const Real eta = t + Real(1) / 2;
  Real sum(0);
  Real binom(k);       // C(k, j), starting at j = 1
  Real half_pow(0.5);  // 2^{-j}
  for (int j = 1; j <= k; j += 2) {
    sum += binom * int_pow(eta, k - j) * half_pow;
    // advance j -> j + 2
    binom = binom * Real(k - j) / Real(j + 1);
    binom = binom * Real(k - j - 1) / Real(j + 2);
    half_pow /= 4;
  }
  return 2 * sum;
}

/// Dimensionless mass m (n+1) L^n / (omega_n M^{n+1}).
template <class Real>
Real scaled_mass(const BasicMinimizationInput<Real>& in)
{
  validate(in);
  const auto dc = dimension_constants<Real>(in.n);
  // Written as a product of ratios so that large n does not overflow.
  return in.m * Real(in.n + 1) / (dc.omega * in.M) * int_pow(in.L / in.M, in.n);
}

/// Unique t >= 0 with (t+1)^{n+1} - t^{n+1} = m_star.
///
/// Bracketed Newton on [max(0, x^{1/n} - 1), x^{1/n}], x = m_star/(n+1),
/// falling back to bisection whenever the Newton iterate leaves the bracket.
template <class Real>
Real solve_t(int n, Real m_star)
{
  using std::pow;
  using std::abs;
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  if (!(m_star >= 1))
    throw std::domain_error("solve_t requires m_star >= 1 (degenerate regime has no plateau)");
  if (m_star == 1) return Real(0);

  const Real x = m_star / Real(n + 1);
  Real hi = pow(x, Real(1) / Real(n));
  Real lo = hi - 1;
  if (lo < 0) lo = 0;

  const Real eps = std::numeric_limits<Real>::epsilon();
  Real t = hi - Real(1) / 2;
  if (t < lo) t = lo;

  for (int iter = 0; iter < 200; ++iter) {
    const Real f = power_difference(n + 1, t) - m_star;
    if (f == 0) return t;
    if (f > 0) hi = t; else lo = t;
    const Real df = Real(n + 1) * power_difference(n, t);
    Real next = t - f / df;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    const Real step = abs(next - t);
    t = next;
    if (step <= 4 * eps * (t > 1 ? t : Real(1))) break;
    if (hi - lo <= 4 * eps * (hi > 1 ? hi : Real(1))) break;
  }
  return t;
}

// Closed-form roots of (t+1)^{n+1} - t^{n+1} = m_star for n = 2, 3, 4.

template <class Real>
Real quadratic_root(Real m_star)
{
  using std::sqrt;
  return sqrt(m_star / 3 - Real(1) / 12) - Real(1) / 2;
}

/// Cardano's formula. The small cube root (-m + sqrt(m^2 + 1/27))^{1/3} is
/// rewritten as (1/3) / (m + sqrt(m^2 + 1/27))^{1/3} to avoid cancellation.
template <class Real>
Real cardano_root(Real m_star)
{
  using std::sqrt;
  using std::cbrt;
  const Real big = cbrt(m_star + sqrt(m_star * m_star + Real(1) / 27));
  const Real small = (Real(1) / 3) / big;
  return (big - small) / 2 - Real(1) / 2;
}

template <class Real>
Real biquadratic_root(Real m_star)
{
  using std::sqrt;
  return sqrt(sqrt(20 * m_star + 5) / 10 - Real(1) / 4) - Real(1) / 2;
}

/// int_0^inf r^gamma Phi_s(r) dr for the plateau-ramp profile with s = t M / L.
template <class Real>
Real profile_moment(Real gamma, Real M, Real L, Real t)
{
  using std::pow;
  using std::floor;
  if (!(M > 0) || !(L > 0)) throw std::invalid_argument("profile_moment requires M, L > 0");
  if (gamma < 0 || t < 0) throw std::invalid_argument("profile_moment requires gamma, t >= 0");
  const Real g2 = gamma + 2;
  Real diff;
  if (gamma == floor(gamma) && gamma < 1000) {
    diff = power_difference(static_cast<int>(g2), t);  // exact integer path
  } else {
    diff = pow(t + 1, g2) - pow(t, g2);
  }
  return pow(M, g2) / ((gamma + 1) * g2 * pow(L, gamma + 1)) * diff;
}

/// Moment of either profile form.
template <class Real>
Real profile_moment(const MinimizerProfile<Real>& profile, Real gamma)
{
  if (profile.kind == ProfileKind::plateau_ramp)
    return profile_moment(gamma, profile.M, profile.L, profile.t);
  return profile_moment(gamma, profile.h, profile.L, Real(0));
}

template <class Real>
bool is_degenerate(const BasicMinimizationInput<Real>& in)
{
  return scaled_mass(in) < 1;
}

/// The minimizing profile for the given input. For m_star < 1 the cap is
/// never reached and the minimizer is the cone (h - L r)_+ with
/// h = M m_star^{1/(n+1)}.
template <class Real>
MinimizerProfile<Real> minimizer_profile(const BasicMinimizationInput<Real>& in)
{
  using std::pow;
  const Real m_star = scaled_mass(in);
  MinimizerProfile<Real> p;
  p.M = in.M;
  p.L = in.L;
  if (m_star >= 1) {
    p.kind = ProfileKind::plateau_ramp;
    p.t = solve_t(in.n, m_star);
    p.s = p.t * in.M / in.L;
    p.h = in.M;
  } else {
    p.kind = ProfileKind::triangular;
    p.h = in.M * pow(m_star, Real(1) / Real(in.n + 1));
  }
  return p;
}

/// sigma_n * int r^{n+power-1} Phi dr at the minimizer: the exact value of the
/// minimization problem for moment power `power`.
template <class Real>
Real sigma_moment(const BasicMinimizationInput<Real>& in, int power)
{
  using std::pow;
  const auto dc = dimension_constants<Real>(in.n);
  const auto profile = minimizer_profile(in);
  const int k = in.n + power + 1;
  const Real prefactor = dc.sigma / (Real(in.n + power) * Real(k));
  if (profile.kind == ProfileKind::plateau_ramp) {
    return prefactor * in.M * int_pow(in.M / in.L, in.n + power) *
           power_difference(k, profile.t);
  }
  return prefactor * profile.h * int_pow(profile.h / in.L, in.n + power);
}

template <class Real>
Real sigma_exact(const BasicMinimizationInput<Real>& in)
{
  return sigma_moment(in, 2);
}

template <class Real>
Real sigma4_exact(const BasicMinimizationInput<Real>& in)
{
  return sigma_moment(in, 4);
}

/// Value without the slope constraint: n/(n+2) (omega_n M)^{-2/n} m^{1+2/n}.
template <class Real>
Real sigma_liyau(const BasicMinimizationInput<Real>& in)
{
  using std::pow;
  if (in.n < 2 || !(in.M > 0) || in.m < 0) throw std::invalid_argument("invalid input for sigma_liyau");
  const auto dc = dimension_constants<Real>(in.n);
  const Real n = in.n;
  return n / (n + 2) * pow(in.m / (dc.omega * in.M), 2 / n) * in.m;
}

/// Moment-4 analogue of sigma_liyau: n/(n+4) (omega_n M)^{-4/n} m^{1+4/n}.
template <class Real>
Real sigma4_leading(const BasicMinimizationInput<Real>& in)
{
  using std::pow;
  const auto dc = dimension_constants<Real>(in.n);
  const Real n = in.n;
  return n / (n + 4) * pow(in.m / (dc.omega * in.M), 4 / n) * in.m;
}

template <class Real>
Real sigma_melas_lb(const BasicMinimizationInput<Real>& in)
{
  validate(in);
  const Real ratio = in.M / in.L;
  return sigma_liyau(in) + ratio * ratio * in.m / (6 * Real(in.n + 2));
}

/// Three-term large-m expansion Sigma_0(m).
template <class Real>
Real sigma_asymptotic(const BasicMinimizationInput<Real>& in)
{
  using std::pow;
  validate(in);
  const auto dc = dimension_constants<Real>(in.n);
  const Real n = in.n;
  const Real ratio2 = (in.M / in.L) * (in.M / in.L);
  const Real second = n / 12 * ratio2 * in.m;
  const Real third_coeff = n * (n - 1) * (3 * n + 2) / 1440;
  const Real third = third_coeff * ratio2 * ratio2 * pow(in.M * dc.omega, 2 / n) *
                     pow(in.m, 1 - 2 / n);
  return sigma_liyau(in) + second - third;
}

/// Coefficients of eta(m_star) = c0 x^{1/n} + c1 x^{-1/n} + c2 x^{-3/n} + ...,
/// x = m_star/(n+1), eta = t + 1/2.
template <class Real = double>
struct EtaCoefficients {
  Real c0, c1, c2;
};

template <class Real = double>
EtaCoefficients<Real> eta_coefficients(int n)
{
  const Real nn = n;
  return {Real(1), -(nn - 1) / 24, (nn - 1) * (nn - 3) * (2 * nn + 1) / 5760};
}

/// Partial sum (1..3 terms) of the large-m_star expansion of t + 1/2.
template <class Real>
Real eta_expansion(int n, Real m_star, int terms)
{
  using std::pow;
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  if (terms < 1 || terms > 3) throw std::invalid_argument("terms must be 1, 2 or 3");
  if (!(m_star >= 1)) throw std::domain_error("eta_expansion requires m_star >= 1");
  const auto c = eta_coefficients<Real>(n);
  const Real x = m_star / Real(n + 1);
  const Real root = pow(x, Real(1) / Real(n));
  Real value = c.c0 * root;
  if (terms >= 2) value += c.c1 / root;
  if (terms >= 3) value += c.c2 / int_pow(root, 3);
  return value;
}

/// Li-Yau term plus beta times the sharp second term, n in {2,3,4}.
template <class Real>
Real sigma_beta_lb(int n, Real M, Real L, Real m, Real beta)
{
  if (n < 2 || n > 4) throw std::invalid_argument("sigma_beta_lb supports n in {2,3,4}");
  if (!(beta > 0) || beta > 1) throw std::invalid_argument("beta must lie in (0,1]");
  const BasicMinimizationInput<Real> in{n, M, L, m};
  validate(in);
  const Real ratio = M / L;
  return sigma_liyau(in) + Real(n) / 12 * beta * ratio * ratio * m;
}

/// (1+u)^a - 1 without cancellation for small u >= 0.
template <class Real>
Real pow1p_minus_one(Real u, Real a)
{
  using std::pow;
  using std::abs;
  if (u > Real(1) / 100) return pow(1 + u, a) - 1;
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real term = a * u;
  Real sum = term;
  for (int k = 1; k < 400 && abs(term) > eps * abs(sum); ++k) {
    term *= (a - Real(k)) / Real(k + 1) * u;
    sum += term;
  }
  return sum;
}

/// Sigma split against its large-m expansion,
///   exact = liyau + second - third + excess,
/// where liyau, second and third are the three terms of Sigma_0.  `gap` is
/// exact - liyau and `excess` is exact - Sigma_0; both are evaluated without
/// forming the difference of the large terms, so they keep full relative
/// accuracy when m_star is large.
template <class Real = double>
struct SigmaDecomposition {
  Real m_star{};
  Real exact{};
  Real liyau{};
  Real second{};
  Real third{};
  Real gap{};
  Real excess{};
  bool degenerate = false;
};

template <class Real>
SigmaDecomposition<Real> sigma_decomposition(const BasicMinimizationInput<Real>& in)
{
  using std::pow;
  SigmaDecomposition<Real> d;
  d.m_star = scaled_mass(in);
  const int n = in.n;
  const Real nn = n;
  const auto dc = dimension_constants<Real>(n);
  const Real scale = dc.sigma / ((nn + 2) * (nn + 3)) * in.M * int_pow(in.M / in.L, n + 2);
  const Real c2 = (nn + 2) / 12;
  const Real c3 = (nn - 1) * (nn + 2) * (3 * nn + 2) / 1440;

  if (d.m_star < 1) {
    d.degenerate = true;
    d.exact = sigma_exact(in);
    d.liyau = sigma_liyau(in);
    const Real x = d.m_star / (nn + 1);
    d.second = scale * (nn + 3) * c2 * x;
    d.third = scale * (nn + 3) * c3 * pow(x, 1 - 2 / nn);
    d.gap = d.exact - d.liyau;
    d.excess = d.gap - d.second + d.third;
    return d;
  }

  const Real eta = solve_t(n, d.m_star) + Real(1) / 2;
  const Real v = 1 / (eta * eta);
  d.liyau = sigma_liyau(in);
  d.exact = sigma_exact(in);
  // f(v) below vanishes at v = -4 tan^2(pi/(n+1)); stay within a quarter of
  // that radius so the truncated series is far below rounding error.
  using std::tan;
  const Real tangent = tan(pi_value<Real>() / Real(n + 1));
  if (v > tangent * tangent) {
    // small m_star: the terms are comparable and plain subtraction is accurate
    const Real x = d.m_star / (nn + 1);
    d.second = scale * (nn + 3) * c2 * x;
    d.third = scale * (nn + 3) * c3 * pow(x, 1 - 2 / nn);
    d.gap = d.exact - d.liyau;
    d.excess = d.gap - d.second + d.third;
    return d;
  }

  // Large m_star.  With v = eta^{-2}, every term is eta^{n+2} times a power
  // series in v:
  //   (n+1) x = P(eta) = (n+1) eta^n f(v),  Q(eta) = eta^{n+2} q(v),
  //   gap    ~ q - (n+3) f^{(n+2)/n},
  //   second ~ (n+3) c2 v f,   third ~ (n+3) c3 v^2 f^{1-2/n}.
  // The v^0, v^1 and v^2 coefficients of gap - second + third vanish
  // identically, so the excess is summed from v^3 on with no cancellation.
  constexpr int K = 64;
  using Series = std::array<Real, K>;
  auto odd_binomial_series = [&](int k, Real norm) {
    Series c{};
    Real binom(k);
    Real half_pow(0.5);
    for (int j = 1; j <= k; j += 2) {
      if ((j - 1) / 2 < K) c[(j - 1) / 2] = 2 * binom * half_pow / norm;
      binom = binom * Real(k - j) / Real(j + 1);
      binom = binom * Real(k - j - 1) / Real(j + 2);
      half_pow /= 4;
    }
    return c;
  };
  // g = f^a by the J.C.P. Miller recurrence (f_0 = 1)
  auto power = [&](const Series& f, Real a) {
    Series g{};
    g[0] = 1;
    for (int k = 1; k < K; ++k) {
      Real acc(0);
      for (int i = 1; i <= k; ++i) acc += (a * Real(i) - Real(k - i)) * f[i] * g[k - i];
      g[k] = acc / Real(k);
    }
    return g;
  };
  const Series f = odd_binomial_series(n + 1, nn + 1);
  const Series q = odd_binomial_series(n + 3, Real(1));
  const Series grow = power(f, (nn + 2) / nn);
  const Series shrink = power(f, 1 - 2 / nn);

  const Real lead = scale * int_pow(eta, n + 2);
  Real gap_s(0), second_s(0), third_s(0), excess_s(0);
  Real vk(1);
  for (int k = 0; k < K; ++k) {
    const Real g_k = q[k] - (nn + 3) * grow[k];
    const Real s_k = k >= 1 ? (nn + 3) * c2 * f[k - 1] : Real(0);
    const Real t_k = k >= 2 ? (nn + 3) * c3 * shrink[k - 2] : Real(0);
    if (k >= 1) gap_s += g_k * vk;
    second_s += s_k * vk;
    third_s += t_k * vk;
    if (k >= 3) excess_s += (g_k - s_k + t_k) * vk;
    vk *= v;
  }
  d.gap = lead * gap_s;
  d.second = lead * second_s;
  d.third = lead * third_s;
  d.excess = lead * excess_s;
  return d;
}

/// Sigma_exact - Sigma_0 (nonnegative for n = 2, 3, 4).
template <class Real>
Real sigma_excess(const BasicMinimizationInput<Real>& in)
{
  return sigma_decomposition(in).excess;
}

/// Closed form of sigma_exact for n = 2.
template <class Real>
Real sigma2_closed_form(Real M, Real L, Real m)
{
  const Real pi = pi_value<Real>();
  const Real r2 = (M / L) * (M / L);
  return m * m / (2 * pi * M) + r2 * m / 6 - pi * M * r2 * r2 / 90;
}

/// Closed form of sigma4_exact for n = 2.
template <class Real>
Real sigma24_closed_form(Real M, Real L, Real m)
{
  const Real pi = pi_value<Real>();
  const Real r2 = (M / L) * (M / L);
  return m * m * m / (3 * pi * pi * M * M) + m * m * r2 / (3 * pi * M) -
         pi * M * r2 * r2 * r2 / 567;
}

}  // namespace eigenbound
