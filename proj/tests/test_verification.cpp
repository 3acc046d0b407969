#include "doctest.h"

#include <cmath>
#include <sstream>

#include "eigenbound/verification.hpp"

using namespace eigenbound;

namespace {
const double pi = pi_value<double>();
constexpr auto lap = OperatorKind::dirichlet_laplacian;

SampleGrid disk_indicator(std::size_t n, double cell, double cx, double cy, double radius)
{
  SampleGrid g{n, n, cell, std::vector<double>(n * n, 0.0)};
  for (std::size_t iy = 0; iy < n; ++iy)
    for (std::size_t ix = 0; ix < n; ++ix) {
      const double x = (ix - (n - 1) / 2.0) * cell - cx;
      const double y = (iy - (n - 1) / 2.0) * cell - cy;
      if (x * x + y * y <= radius * radius) g.values[iy * n + ix] = 1;
    }
  return g;
}
}  // namespace

TEST_CASE("box spectra")
{
  const auto s5 = box_spectrum({1, 1}, 5);
  const double expect[] = {2, 5, 5, 8, 10};
  REQUIRE(s5.eigenvalues.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(s5.eigenvalues[i] == doctest::Approx(expect[i] * pi * pi).epsilon(1e-14));

  const auto s10 = box_spectrum({1, 1}, 10);
  double sum = 0;
  for (double v : s10.eigenvalues) sum += v;
  CHECK(sum == doctest::Approx(100 * pi * pi).epsilon(1e-13));

  CHECK(box_spectrum({1, 2}, 1).eigenvalues[0] == doctest::Approx(1.25 * pi * pi).epsilon(1e-14));
  CHECK(box_spectrum({1, 1, 1}, 4).eigenvalues[3] == doctest::Approx(6 * pi * pi).epsilon(1e-14));

  BoxSpectrumOptions threaded;
  threaded.workers = 4;
  CHECK(box_spectrum({1, 1.3, 0.7}, 3000, threaded).eigenvalues == box_spectrum({1, 1.3, 0.7}, 3000).eigenvalues);

  BoxSpectrumOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(box_spectrum({1, 1}, 100, tiny), std::runtime_error);
}

TEST_CASE("spectrum CSV")
{
  std::istringstream in("eigenvalue,index\n5.0,2\n\n2.0,1\n");
  const auto s = read_spectrum_csv(in, lap);
  CHECK(s.eigenvalues == std::vector<double>{2.0, 5.0});
  CHECK(s.source == SpectrumSource::external);
  std::istringstream bad("1.0\nabc\n");
  CHECK_THROWS_AS(read_spectrum_csv(bad, lap), std::invalid_argument);
  std::istringstream neg("-1.0\n");
  CHECK_THROWS_AS(read_spectrum_csv(neg, lap), std::invalid_argument);
}

TEST_CASE("quadrature moments")
{
  const MinimizerProfile<double> p{ProfileKind::plateau_ramp, 1, 1, 1, 1, 1};
  CHECK(std::abs(quadrature_moment(p, 1) - 7.0 / 6) <= 1e-8);
  CHECK(std::abs(quadrature_moment(p, 3) - 31.0 / 20) <= 1e-8);
  const MinimizerProfile<double> tri{ProfileKind::triangular, 1, 1, 0, 0, 1};
  CHECK(std::abs(quadrature_moment(tri, 1) - 1.0 / 6) <= 1e-8);
  const auto deep = minimizer_profile(MinimizationInput{3, 1, 0.1, 1e4});
  CHECK(quadrature_moment(deep, 4) == doctest::Approx(profile_moment(deep, 4.0)).epsilon(1e-12));
}

TEST_CASE("LP oracle")
{
  const auto a = lp_minimize(2, 1, 1, 7 * pi / 3, 400, default_lp_radius({2, 1, 1, 7 * pi / 3}));
  CHECK(std::abs(a.objective - 31 * pi / 10) <= 0.01 * 31 * pi / 10);
  CHECK(a.objective >= 31 * pi / 10 * (1 - 1e-9));
  const auto b = lp_minimize(2, 1, 1, pi / 3, 400, default_lp_radius({2, 1, 1, pi / 3}));
  CHECK(std::abs(b.objective - pi / 10) <= 0.01 * pi / 10);
  // the discrete optimum looks like the plateau-ramp profile
  const auto prof = minimizer_profile(MinimizationInput{2, 1, 1, 7 * pi / 3});
  double worst = 0;
  for (std::size_t i = 0; i < a.radii.size(); ++i) worst = std::max(worst, std::abs(a.profile[i] - prof(a.radii[i])));
  CHECK(worst < 0.02);
  // mass beyond the grid is infeasible
  CHECK_THROWS_AS(lp_minimize(2, 1, 1, 7 * pi / 3, 100, 1.0), std::domain_error);
  CHECK_THROWS_AS(lp_minimize(2, 1, 1, 1, 10, 3.0), std::invalid_argument);
}

TEST_CASE("LP error decays under refinement")
{
  for (int n : {2, 3}) {
    const MinimizationInput in{n, 1, 1, n == 2 ? 7 * pi / 3 : 5 * pi};
    const double exact = sigma_exact(in);
    double prev = 1e300;
    for (int g : {100, 200, 400, 800}) {
      const double err = std::abs(lp_minimize(n, 1, 1, in.m, g, default_lp_radius(in)).objective - exact);
      CHECK_MESSAGE(err < prev, "n=" << n << " grid=" << g);
      prev = err;
    }
  }
}

TEST_CASE("rearrangement")
{
  const auto centred = rearrangement_moment_check(disk_indicator(81, 0.05, 0, 0, 1));
  CHECK(centred.ok);
  CHECK(centred.raw == doctest::Approx(centred.rearranged).epsilon(1e-12));

  const auto off = rearrangement_moment_check(disk_indicator(81, 0.05, 0.6, -0.3, 0.9));
  CHECK(off.ok);
  CHECK(off.raw > off.rearranged);

  // values M and M/2 on nested discs, the inner one off-centre
  auto outer = disk_indicator(81, 0.05, 0, 0, 1.5);
  const auto inner = disk_indicator(81, 0.05, 0.4, 0.2, 0.6);
  for (std::size_t i = 0; i < outer.values.size(); ++i) outer.values[i] = 0.5 * outer.values[i] + 0.5 * inner.values[i];
  const auto step = rearrangement_moment_check(outer);
  CHECK(step.ok);
  CHECK(step.raw >= step.rearranged);

  const auto r = symmetric_decreasing_rearrangement(outer);
  auto a = outer.values, b = r.values;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("audit: unit square and cube")
{
  const auto sq = audit(lap, Box{{1, 1}, {}}, 200);
  CHECK(sq.ok());
  CHECK(sq.has_spectrum);
  CHECK(sq.rows.size() == 200);
  CHECK(sq.argmin_slack == 1);
  CHECK(sq.rows[9].spectrum_sum == doctest::Approx(100 * pi * pi).epsilon(1e-13));
  CHECK(sq.rows[9].slack == doctest::Approx(100 * pi * pi - 630.8165).epsilon(1e-5));
  CHECK(sq.rows[0].spectrum_sum == doctest::Approx(2 * pi * pi));
  CHECK(sq.rows[0].exact == doctest::Approx(6.53).epsilon(1e-3));

  const auto cube = audit(lap, Box{{1, 1, 1}, {}}, 100);
  CHECK(cube.ok());
  CHECK(cube.rows.size() == 100);
}

TEST_CASE("audit: external spectra")
{
  auto sample = box_spectrum({1, 1}, 50);
  sample.source = SpectrumSource::external;
  AuditOptions opts;
  opts.spectrum = sample;
  CHECK(audit(lap, Box{{1, 1}, {}}, 50, opts).ok());

  for (double& v : sample.eigenvalues) v /= 2;
  opts.spectrum = sample;
  const auto bad = audit(lap, Box{{1, 1}, {}}, 50, opts);
  CHECK_FALSE(bad.ok());
  CHECK(bad.violations.front().what.find("spectrum") != std::string::npos);

  // shapes without a spectrum still get the internal orderings
  const auto disk = audit(OperatorKind::stokes, Ball{2, 1, {}}, 30);
  CHECK(disk.ok());
  CHECK_FALSE(disk.has_spectrum);
  CHECK(std::isnan(disk.rows[0].slack));

  opts.spectrum = box_spectrum({1, 1}, 10);
  CHECK_THROWS(audit(lap, Box{{1, 1}, {}}, 20, opts));
}

TEST_CASE("Weyl ratio at m = 1e4")
{
  const auto s = box_spectrum({1, 1}, 10000);
  double sum = 0;
  for (double v : s.eigenvalues) sum += v;
  const double liyau = bound_liyau(lap, GeometrySummary{2, 1.0, 1.0 / 6}, 10000);
  CHECK(liyau / sum > 0.95);
  CHECK(liyau / sum < 1.0);
}

TEST_CASE("closed-form moments against quadrature")
{
  for (int n = 2; n <= 4; ++n)
    for (double t : {0.0, 0.3, 1.0, 7.5, 50.0}) {
      const MinimizerProfile<double> p{ProfileKind::plateau_ramp, 1.3, 0.6, t * 1.3 / 0.6, t, 1.3};
      for (double gamma : {n - 1.0, n + 1.0, n + 3.0}) {
        const double closed = profile_moment(gamma, 1.3, 0.6, t);
        CHECK_MESSAGE(std::abs(quadrature_moment(p, gamma) - closed) <= 1e-8 * closed,
                      "n=" << n << " t=" << t << " gamma=" << gamma);
      }
    }
}
