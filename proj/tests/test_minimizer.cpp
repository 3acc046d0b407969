#include "doctest.h"

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "eigenbound/minimizer.hpp"

using namespace eigenbound;
using mp50 = boost::multiprecision::cpp_bin_float_50;

namespace {
const double pi = pi_value<double>();

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(b), 1e-300); }
}  // namespace

TEST_CASE("dimension constants")
{
  auto c2 = dimension_constants(2);
  CHECK(c2.omega == doctest::Approx(pi).epsilon(1e-15));
  CHECK(c2.sigma == doctest::Approx(2 * pi).epsilon(1e-15));
  auto c3 = dimension_constants(3);
  CHECK(c3.omega == doctest::Approx(4 * pi / 3).epsilon(1e-15));
  CHECK(c3.sigma == doctest::Approx(4 * pi).epsilon(1e-15));
  auto c4 = dimension_constants(4);
  CHECK(c4.omega == doctest::Approx(pi * pi / 2).epsilon(1e-15));
  CHECK(c4.sigma == doctest::Approx(2 * pi * pi).epsilon(1e-15));
  CHECK_THROWS_AS(dimension_constants(1), std::invalid_argument);
}

TEST_CASE("scaled mass")
{
  CHECK(scaled_mass(MinimizationInput{2, 1, 1, 7 * pi / 3}) == doctest::Approx(7).epsilon(1e-14));
  CHECK(scaled_mass(MinimizationInput{2, 1, 1, pi / 3}) == doctest::Approx(1).epsilon(1e-14));
  const double M = 1 / (4 * pi * pi);
  const double L = 2 * M * std::sqrt(1.0 / 6);
  CHECK(scaled_mass(MinimizationInput{2, M, L, 1}) == doctest::Approx(8 * pi).epsilon(1e-13));
  CHECK_THROWS_AS(scaled_mass(MinimizationInput{2, -1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(scaled_mass(MinimizationInput{2, 1, 1, 0}), std::invalid_argument);
}

TEST_CASE("solve_t: reference points")
{
  CHECK(solve_t(2, 1.0) == 0.0);
  CHECK(solve_t(2, 7.0) == doctest::Approx(1).epsilon(1e-14));
  CHECK(solve_t(3, 15.0) == doctest::Approx(1).epsilon(1e-14));
  CHECK(solve_t(4, 31.0) == doctest::Approx(1).epsilon(1e-14));
  CHECK_THROWS_AS(solve_t(2, 0.5), std::domain_error);
}

TEST_CASE("solve_t: residual over n = 2..8 and closed forms")
{
  const double masses[] = {1, 7, 15, 31, 1e3, 1e6, 1e12};
  for (int n = 2; n <= 8; ++n)
    for (double ms : masses) {
      const double t = solve_t(n, ms);
      CHECK(t >= 0);
      const double resid = std::abs(power_difference(n + 1, t) - ms) / ms;
      CHECK_MESSAGE(resid <= 1e-10, "n=" << n << " m*=" << ms);
    }
  for (double ms : masses) {
    CHECK(rel_close(1 + quadratic_root(ms), 1 + solve_t(2, ms), 1e-10));
    CHECK(rel_close(1 + cardano_root(ms), 1 + solve_t(3, ms), 1e-10));
    CHECK(rel_close(1 + biquadratic_root(ms), 1 + solve_t(4, ms), 1e-10));
  }
}

TEST_CASE("solve_t in multiprecision")
{
  const mp50 ms("1e12");
  const mp50 t = solve_t(3, ms);
  const mp50 resid = abs(power_difference(4, t) - ms) / ms;
  CHECK(resid < mp50("1e-45"));
  CHECK(static_cast<double>(abs(t - cardano_root(ms))) < 1e-40);
}

TEST_CASE("profile moments")
{
  CHECK(profile_moment(1.0, 1.0, 1.0, 1.0) == doctest::Approx(7.0 / 6).epsilon(1e-14));
  CHECK(profile_moment(1.0, 1.0, 1.0, 0.0) == doctest::Approx(1.0 / 6).epsilon(1e-14));
  CHECK(profile_moment(3.0, 1.0, 1.0, 1.0) == doctest::Approx(31.0 / 20).epsilon(1e-14));
}

TEST_CASE("minimizer profile shape")
{
  const auto p = minimizer_profile(MinimizationInput{2, 1, 1, 7 * pi / 3});
  CHECK(p.kind == ProfileKind::plateau_ramp);
  CHECK(p.t == doctest::Approx(1));
  CHECK(p(0.5) == 1);
  CHECK(p(1.5) == doctest::Approx(0.5));
  CHECK(p(3) == 0);
  const auto tri = minimizer_profile(MinimizationInput{2, 1, 1, pi / 24});  // m* = 1/8
  CHECK(tri.kind == ProfileKind::triangular);
  CHECK(tri.h == doctest::Approx(0.5));
  CHECK(tri.support() == doctest::Approx(0.5));
}

TEST_CASE("sigma_exact reference values")
{
  CHECK(sigma_exact(MinimizationInput{2, 1, 1, 7 * pi / 3}) == doctest::Approx(31 * pi / 10).epsilon(1e-13));
  CHECK(sigma_exact(MinimizationInput{2, 1, 1, pi / 3}) == doctest::Approx(pi / 10).epsilon(1e-13));
  CHECK(sigma_exact(MinimizationInput{3, 1, 1, 5 * pi}) == doctest::Approx(42 * pi / 5).epsilon(1e-13));
  CHECK(sigma4_exact(MinimizationInput{2, 1, 1, 7 * pi / 3}) == doctest::Approx(127 * pi / 21).epsilon(1e-13));
  CHECK(sigma4_exact(MinimizationInput{2, 1, 1, pi / 3}) == doctest::Approx(pi / 21).epsilon(1e-13));
  CHECK(sigma24_closed_form(1.0, 1.0, 7 * pi / 3) == doctest::Approx(127 * pi / 21).epsilon(1e-13));
}

TEST_CASE("degenerate regime is continuous at m* = 1")
{
  const double m = pi / 3;
  const double below = sigma_exact(MinimizationInput{2, 1, 1, m * (1 - 1e-9)});
  const double above = sigma_exact(MinimizationInput{2, 1, 1, m * (1 + 1e-9)});
  CHECK(below == doctest::Approx(pi / 10).epsilon(1e-8));
  CHECK(above == doctest::Approx(pi / 10).epsilon(1e-8));
}

TEST_CASE("Li-Yau and Melas terms")
{
  CHECK(sigma_liyau(MinimizationInput{2, 1, 1, 7 * pi / 3}) == doctest::Approx(49 * pi / 18).epsilon(1e-14));
  const double m = 5 * pi;
  const double expected = 0.6 * std::pow(3 / (4 * pi), 2.0 / 3) * std::pow(m, 5.0 / 3);
  CHECK(sigma_liyau(MinimizationInput{3, 1, 1, m}) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected < 42 * pi / 5);
  CHECK(sigma_melas_lb(MinimizationInput{2, 1, 1, 7 * pi / 3}) == doctest::Approx(203 * pi / 72).epsilon(1e-14));
  CHECK(sigma_liyau(MinimizationInput{2, 1, 1, 1e-300}) == doctest::Approx(0));
}

TEST_CASE("asymptotic form")
{
  CHECK(sigma_asymptotic(MinimizationInput{2, 1, 1, 7 * pi / 3}) == doctest::Approx(31 * pi / 10).epsilon(1e-14));
  const MinimizationInput in3{3, 1, 1, 5 * pi};
  CHECK(sigma_asymptotic(in3) < sigma_exact(in3));
  // beta = 1 two-term bound sits exactly pi/90 above Sigma for n = 2
  const double b = sigma_beta_lb(2, 1.0, 1.0, 7 * pi / 3, 1.0);
  CHECK(b == doctest::Approx(28 * pi / 9).epsilon(1e-14));
  CHECK(31 * pi / 10 - b == doctest::Approx(-pi / 90).epsilon(1e-12));
}

TEST_CASE("eta expansion")
{
  CHECK(eta_coefficients(3).c1 == doctest::Approx(-1.0 / 12));
  CHECK(eta_coefficients(3).c2 == 0);
  CHECK(eta_coefficients(2).c2 == doctest::Approx(-1.0 / 1152));
  CHECK(eta_expansion(3, 1e4, 3) == eta_expansion(3, 1e4, 2));
  const double three = eta_expansion(2, 7.0, 3);
  CHECK(std::abs(three - 1.5) < 1e-5);
  CHECK(std::abs(three - 1.5) < std::abs(eta_expansion(2, 7.0, 2) - 1.5));
}

TEST_CASE("eta expansion: scaled 3-term error is bounded and decreasing")
{
  for (int n : {2, 3, 4, 5}) {
    mp50 prev = -1;
    for (int e = 2; e <= 10; ++e) {
      const mp50 ms = pow(mp50(10), e);
      const mp50 eta = solve_t(n, ms) + mp50(1) / 2;
      const mp50 err = abs(eta - eta_expansion(n, ms, 3)) * pow(ms, mp50(3) / n);
      CHECK(err < 1);
      if (prev >= 0) CHECK_MESSAGE(err < prev, "n=" << n << " m*=1e" << e);
      prev = err;
    }
  }
}

TEST_CASE("closed form n = 2 over random inputs")
{
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> logu(-3, 3);
  for (int i = 0; i < 1000; ++i) {
    const double M = std::pow(10, logu(rng));
    const double L = std::pow(10, logu(rng));
    const double ms = std::pow(10, (logu(rng) + 3) * 1.5);  // 1 .. 1e9
    const double m = ms * pi * M * M * M / (3 * L * L);
    const MinimizationInput in{2, M, L, m};
    CHECK(rel_close(sigma_exact(in), sigma2_closed_form(M, L, m), 1e-12));
    CHECK(rel_close(sigma_exact(in), sigma_asymptotic(in), 1e-12));
  }
}

TEST_CASE("homogeneity under (M, L, m) -> (aM, aL, am)")
{
  for (int n = 2; n <= 5; ++n)
    for (double a : {0.01, 3.0, 250.0}) {
      const MinimizationInput in{n, 0.7, 1.3, 40};
      const MinimizationInput sc{n, a * 0.7, a * 1.3, a * 40};
      CHECK(rel_close(scaled_mass(sc), scaled_mass(in), 1e-13));
      CHECK(rel_close(sigma_exact(sc), a * sigma_exact(in), 1e-12));
    }
}

TEST_CASE("decomposition: double agrees with 50-digit evaluation")
{
  for (int n : {3, 4})
    for (double ms : {20.0, 1e3, 1e6, 1e8}) {
      const double L = 1, M = 1;
      const double m = ms * dimension_constants(n).omega / (n + 1);
      const auto d = sigma_decomposition(MinimizationInput{n, M, L, m});
      const BasicMinimizationInput<mp50> hp{n, mp50(M), mp50(L), mp50(m)};
      const mp50 exact = sigma_exact(hp);
      const mp50 s0 = sigma_asymptotic(hp);
      CHECK(rel_close(d.exact, static_cast<double>(exact), 1e-13));
      CHECK(rel_close(d.excess, static_cast<double>(exact - s0), 1e-9));
      CHECK(rel_close(d.gap, static_cast<double>(exact - sigma_liyau(hp)), 1e-12));
      CHECK(d.excess > 0);
    }
}

TEST_CASE("n = 2 excess vanishes")
{
  const auto d = sigma_decomposition(MinimizationInput{2, 1, 1, 1e6});
  CHECK(std::abs(d.excess) <= 1e-12 * d.exact);
}

TEST_CASE("mass closure")
{
  for (int n = 2; n <= 6; ++n)
    for (double ms : {1.25, 3.5, 80.0, 1e5, 1e9}) {
      const double M = 0.8, L = 1.9;
      const double m = ms * dimension_constants(n).omega * std::pow(M / L, n) * M / (n + 1);
      const MinimizationInput in{n, M, L, m};
      const double t = solve_t(n, scaled_mass(in));
      const double mass = dimension_constants(n).sigma * profile_moment(double(n - 1), M, L, t);
      CHECK(rel_close(mass, m, 1e-10));
    }
}
