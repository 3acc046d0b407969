#include "doctest.h"

#include <cmath>

#include "catalog.hpp"
#include "eigenbound/geometry.hpp"
#include "eigenbound/shape_io.hpp"

using namespace eigenbound;

namespace {
const double pi = pi_value<double>();
const Polygon2D square_poly{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
}  // namespace

TEST_CASE("volumes")
{
  CHECK(volume(Box{{1, 1}, {}}) == 1);
  CHECK(volume(Ball{2, 1, {}}) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(volume(square_poly) == doctest::Approx(1).epsilon(1e-15));
  CHECK(volume(Ellipse2D{2, 1, {0, 0}}) == doctest::Approx(2 * pi).epsilon(1e-15));
  CHECK(volume(BoxUnion{{Box{{2, 1}, {0, 0}}, Box{{1, 1}, {0, 1}}}}) == doctest::Approx(3));
}

TEST_CASE("centroids")
{
  auto c = centroid(Box{{1, 1}, {}});
  CHECK(c[0] == 0.5);
  CHECK(c[1] == 0.5);
  auto b = centroid(Ball{3, 2, {1, -2, 3}});
  CHECK(b == Point{1, -2, 3});
  auto t = centroid(Polygon2D{{{0, 0}, {1, 0}, {0, 1}}});
  CHECK(t[0] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(t[1] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  auto l = centroid(Polygon2D{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}});
  auto u = centroid(BoxUnion{{Box{{2, 1}, {0, 0}}, Box{{1, 1}, {0, 1}}}});
  CHECK(l[0] == doctest::Approx(u[0]).epsilon(1e-14));
  CHECK(l[1] == doctest::Approx(u[1]).epsilon(1e-14));
  CHECK(l[0] == doctest::Approx(5.0 / 6));
}

TEST_CASE("second moments")
{
  CHECK(inertia_min(Box{{1, 1}, {}}) == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(inertia_min(Ball{2, 1, {}}) == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(inertia_min(square_poly) == doctest::Approx(1.0 / 6).epsilon(1e-12));
  CHECK(inertia_min(Polygon2D{{{3, 4}, {4, 4}, {4, 5}, {3, 5}}}) == doctest::Approx(1.0 / 6).epsilon(1e-12));
  CHECK(inertia_min(Ellipse2D{2, 1, {0, 0}}) == doctest::Approx(pi * 2 * (4 + 1) / 4).epsilon(1e-14));
  // parallel axis: moment about a = I + |Omega| |a - c|^2
  const Box rect{{1, 2}, {}};
  CHECK(second_moment_about(rect, {0, 0}) ==
        doctest::Approx(inertia_min(rect) + 2 * (0.25 + 1)).epsilon(1e-14));
  CHECK(inertia_min(Polygon2D{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}}) ==
        doctest::Approx(inertia_min(BoxUnion{{Box{{2, 1}, {0, 0}}, Box{{1, 1}, {0, 1}}}})).epsilon(1e-13));
}

TEST_CASE("moment inequality on the catalog")
{
  for (const auto& [name, shape] : testing::shape_catalog()) {
    const auto chk = check_isoperimetric_moment(shape);
    CHECK_MESSAGE(chk.ok, name);
    CHECK_MESSAGE(chk.lhs >= chk.rhs * (1 - 1e-12), name);
    if (std::holds_alternative<Ball>(shape))
      CHECK_MESSAGE(std::abs(chk.lhs - chk.rhs) <= 1e-12 * chk.rhs, name);
  }
  const auto disk = check_isoperimetric_moment(Ball{2, 1, {}});
  CHECK(disk.lhs == doctest::Approx(pi / 2).epsilon(1e-14));
  CHECK(disk.rhs == doctest::Approx(pi / 2).epsilon(1e-14));
  const auto sq = check_isoperimetric_moment(Box{{1, 1}, {}});
  CHECK(sq.rhs == doctest::Approx(1 / (2 * pi)).epsilon(1e-14));
  CHECK(sq.lhs > sq.rhs);
  const auto b3 = check_isoperimetric_moment(Ball{3, 1, {}});
  CHECK(b3.lhs == doctest::Approx(4 * pi / 5).epsilon(1e-14));
}

TEST_CASE("translation invariance and dilation scaling")
{
  for (const auto& [name, shape] : testing::shape_catalog()) {
    const int n = dimension(shape);
    Point v(n);
    for (int i = 0; i < n; ++i) v[i] = 0.37 * (i + 1) - 1;
    const double I = inertia_min(shape);
    CHECK_MESSAGE(inertia_min(translated(shape, v)) == doctest::Approx(I).epsilon(1e-11), name);
    const double a = 1.7;
    const auto s = scaled(shape, a);
    CHECK_MESSAGE(volume(s) == doctest::Approx(std::pow(a, n) * volume(shape)).epsilon(1e-13), name);
    CHECK_MESSAGE(inertia_min(s) == doctest::Approx(std::pow(a, n + 2) * I).epsilon(1e-11), name);
  }
}

TEST_CASE("validation")
{
  CHECK_THROWS_AS(validate(Box{{1, -1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Box{{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Ball{2, 0, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Polygon2D{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}), std::invalid_argument);  // clockwise
  CHECK_THROWS_AS(validate(Polygon2D{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}}), std::invalid_argument);  // bow tie
  CHECK_THROWS_AS(validate(BoxUnion{{Box{{2, 2}, {0, 0}}, Box{{1, 1}, {1, 1}}}}), std::invalid_argument);
  CHECK_NOTHROW(validate(BoxUnion{{Box{{1, 1}, {0, 0}}, Box{{1, 1}, {1, 0}}}}));
}

TEST_CASE("shape documents")
{
  const auto sq = parse_shape(R"({"type":"box","dimension":2,"sides":[1,1],"name":"square"})");
  CHECK(inertia_min(sq) == doctest::Approx(1.0 / 6));
  const auto poly = parse_shape(R"({"type":"polygon","vertices":[[0,0],[1,0],[1,1],[0,1]]})");
  CHECK(volume(poly) == doctest::Approx(1));
  const auto ball = parse_shape(R"({"type":"ball","dimension":3,"radius":2})");
  CHECK(dimension(ball) == 3);
  const auto un = parse_shape(R"({"type":"box_union","boxes":[{"sides":[1,1]},{"sides":[1,1],"origin":[1,0]}]})");
  CHECK(volume(un) == doctest::Approx(2));

  for (const auto& [name, shape] : testing::shape_catalog()) {
    const auto again = parse_shape(shape_to_json(shape));
    CHECK_MESSAGE(shape_to_json(again) == shape_to_json(shape), name);
    CHECK_MESSAGE(inertia_min(again) == inertia_min(shape), name);
  }

  try {
    parse_shape(R"({"type":"box","sides":[1,1],"colour":"red"})");
    FAIL("unknown field accepted");
  } catch (const ShapeParseError& e) {
    CHECK(std::string(e.what()).find("colour") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_shape("{not json"), ShapeParseError);
  CHECK_THROWS_AS(parse_shape(R"({"type":"torus"})"), ShapeParseError);
  CHECK_THROWS_AS(parse_shape(R"({"type":"ball","radius":1})"), ShapeParseError);
  CHECK_THROWS_AS(parse_shape(R"({"type":"box","dimension":3,"sides":[1,1]})"), ShapeParseError);
  CHECK_THROWS_AS(parse_shape(R"({"type":"box","sides":[1,"x"]})"), ShapeParseError);
}

TEST_CASE("parallel axis")
{
  for (const auto& [name, shape] : testing::shape_catalog()) {
    const int n = dimension(shape);
    const Point c = centroid(shape);
    for (int probe = 0; probe < 3; ++probe) {
      Point a(n);
      double d2 = 0;
      for (int i = 0; i < n; ++i) {
        a[i] = std::sin(1.7 * (i + 1) + probe) * 2;
        d2 += (a[i] - c[i]) * (a[i] - c[i]);
      }
      const double expect = inertia_min(shape) + volume(shape) * d2;
      CHECK_MESSAGE(second_moment_about(shape, a) == doctest::Approx(expect).epsilon(1e-12), name);
    }
  }
}
