#include "eigenbound/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eigenbound {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using Vec2 = std::array<double, 2>;

Point zeros(int n) { return Point(static_cast<std::size_t>(n), 0.0); }

Point origin_of(const Box& b) { return b.origin.empty() ? zeros(int(b.sides.size())) : b.origin; }
Point center_of(const Ball& b) { return b.center.empty() ? zeros(b.n) : b.center; }

double squared_distance(const Point& a, const Point& b)
{
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

void require_dimension(const Point& p, int n, const char* what)
{
  if (static_cast<int>(p.size()) != n)
    throw std::invalid_argument(std::string(what) + " has dimension " + std::to_string(p.size()) +
                                ", expected " + std::to_string(n));
}

// --- boxes ---------------------------------------------------------------

void validate_box(const Box& b)
{
  if (b.sides.size() < 2) throw std::invalid_argument("box needs at least 2 sides");
  for (double s : b.sides)
    if (!(s > 0) || !std::isfinite(s)) throw std::invalid_argument("box sides must be positive");
  if (!b.origin.empty()) require_dimension(b.origin, int(b.sides.size()), "box origin");
}

double box_volume(const Box& b)
{
  double v = 1;
  for (double s : b.sides) v *= s;
  return v;
}

Point box_centroid(const Box& b)
{
  Point c = origin_of(b);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.sides[i] / 2;
  return c;
}

double box_moment_about(const Box& b, const Point& a)
{
  const Point lo = origin_of(b);
  const double vol = box_volume(b);
  double total = 0;
  for (std::size_t i = 0; i < b.sides.size(); ++i) {
    const double u = lo[i] - a[i];
    const double w = u + b.sides[i];
    // int_u^w x^2 dx times the cross-section
    total += vol / b.sides[i] * (w * w * w - u * u * u) / 3;
  }
  return total;
}

bool interiors_overlap(const Box& p, const Box& q)
{
  const Point po = origin_of(p), qo = origin_of(q);
  for (std::size_t i = 0; i < p.sides.size(); ++i) {
    const double lo = std::max(po[i], qo[i]);
    const double hi = std::min(po[i] + p.sides[i], qo[i] + q.sides[i]);
    if (!(lo < hi)) return false;
  }
  return true;
}

// --- polygons ------------------------------------------------------------

double cross(const Vec2& o, const Vec2& a, const Vec2& b)
{
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const Vec2& p, const Vec2& q, const Vec2& r)
{
  return std::min(p[0], r[0]) <= q[0] && q[0] <= std::max(p[0], r[0]) &&
         std::min(p[1], r[1]) <= q[1] && q[1] <= std::max(p[1], r[1]);
}

int sign(double v) { return (v > 0) - (v < 0); }

bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2)
{
  const int d1 = sign(cross(q1, q2, p1));
  const int d2 = sign(cross(q1, q2, p2));
  const int d3 = sign(cross(p1, p2, q1));
  const int d4 = sign(cross(p1, p2, q2));
  if (d1 != d2 && d3 != d4 && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0) return true;
  if (d1 == 0 && on_segment(q1, p1, q2)) return true;
  if (d2 == 0 && on_segment(q1, p2, q2)) return true;
  if (d3 == 0 && on_segment(p1, q1, p2)) return true;
  if (d4 == 0 && on_segment(p1, q2, p2)) return true;
  return false;
}

// Area, first and second moments of a polygon with vertices shifted by -a,
// from Green's theorem edge by edge.
struct PolygonMoments {
  double area = 0;
  Vec2 first{0, 0};  // int x, int y
  double polar = 0;  // int x^2 + y^2
};

PolygonMoments polygon_moments(const Polygon2D& p, const Vec2& a)
{
  PolygonMoments mo;
  const std::size_t n = p.vertices.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const double x0 = p.vertices[j][0] - a[0], y0 = p.vertices[j][1] - a[1];
    const double x1 = p.vertices[i][0] - a[0], y1 = p.vertices[i][1] - a[1];
    const double c = x0 * y1 - x1 * y0;
    mo.area += c;
    mo.first[0] += (x0 + x1) * c;
    mo.first[1] += (y0 + y1) * c;
    mo.polar += (x0 * x0 + x0 * x1 + x1 * x1 + y0 * y0 + y0 * y1 + y1 * y1) * c;
  }
  mo.area /= 2;
  mo.first[0] /= 6;
  mo.first[1] /= 6;
  mo.polar /= 12;
  return mo;
}

Vec2 vertex_mean(const Polygon2D& p)
{
  Vec2 mean{0, 0};
  for (const auto& v : p.vertices) {
    mean[0] += v[0];
    mean[1] += v[1];
  }
  mean[0] /= double(p.vertices.size());
  mean[1] /= double(p.vertices.size());
  return mean;
}

void validate_polygon(const Polygon2D& p)
{
  const std::size_t n = p.vertices.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (const auto& v : p.vertices)
    if (!std::isfinite(v[0]) || !std::isfinite(v[1]))
      throw std::invalid_argument("polygon vertices must be finite");
  const auto mo = polygon_moments(p, vertex_mean(p));
  if (mo.area == 0) throw std::invalid_argument("polygon is degenerate (zero area)");
  if (mo.area < 0) throw std::invalid_argument("polygon vertices must be counterclockwise");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a0 = p.vertices[i];
    const auto& a1 = p.vertices[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const auto& b0 = p.vertices[j];
      const auto& b1 = p.vertices[(j + 1) % n];
      if (adjacent) {
        // Adjacent edges share one vertex; they must not fold back onto each other.
        const Vec2& shared = (j == i + 1) ? a1 : a0;
        const Vec2& other_a = (j == i + 1) ? a0 : a1;
        const Vec2& other_b = (j == i + 1) ? b1 : b0;
        if (cross(shared, other_a, other_b) == 0 &&
            ((other_a[0] - shared[0]) * (other_b[0] - shared[0]) +
             (other_a[1] - shared[1]) * (other_b[1] - shared[1])) > 0)
          throw std::invalid_argument("polygon has overlapping adjacent edges at vertex " +
                                      std::to_string(j == i + 1 ? i + 1 : i));
        continue;
      }
      if (segments_intersect(a0, a1, b0, b1))
        throw std::invalid_argument("polygon is not simple: edges " + std::to_string(i) + " and " +
                                    std::to_string(j) + " intersect");
    }
  }
}

Vec2 polygon_centroid(const Polygon2D& p)
{
  const Vec2 shift = vertex_mean(p);
  const auto mo = polygon_moments(p, shift);
  return {shift[0] + mo.first[0] / mo.area, shift[1] + mo.first[1] / mo.area};
}

}  // namespace

std::string shape_type(const DomainShape& shape)
{
  return std::visit(overloaded{[](const Box&) { return std::string("box"); },
                               [](const Ball&) { return std::string("ball"); },
                               [](const Ellipse2D&) { return std::string("ellipse"); },
                               [](const Polygon2D&) { return std::string("polygon"); },
                               [](const BoxUnion&) { return std::string("box_union"); }},
                    shape);
}

int dimension(const DomainShape& shape)
{
  return std::visit(
      overloaded{[](const Box& b) { return int(b.sides.size()); },
                 [](const Ball& b) { return b.n; },
                 [](const Ellipse2D&) { return 2; },
                 [](const Polygon2D&) { return 2; },
                 [](const BoxUnion& u) { return u.boxes.empty() ? 0 : int(u.boxes.front().sides.size()); }},
      shape);
}

void validate(const DomainShape& shape)
{
  std::visit(
      overloaded{
          [](const Box& b) { validate_box(b); },
          [](const Ball& b) {
            if (b.n < 2) throw std::invalid_argument("ball dimension must be >= 2");
            if (!(b.radius > 0) || !std::isfinite(b.radius))
              throw std::invalid_argument("ball radius must be positive");
            if (!b.center.empty()) require_dimension(b.center, b.n, "ball center");
          },
          [](const Ellipse2D& e) {
            if (!(e.a > 0) || !(e.b > 0) || !std::isfinite(e.a) || !std::isfinite(e.b))
              throw std::invalid_argument("ellipse semi-axes must be positive");
          },
          [](const Polygon2D& p) { validate_polygon(p); },
          [](const BoxUnion& u) {
            if (u.boxes.empty()) throw std::invalid_argument("box union is empty");
            const std::size_t n = u.boxes.front().sides.size();
            for (const auto& b : u.boxes) {
              validate_box(b);
              if (b.sides.size() != n)
                throw std::invalid_argument("box union members must share a dimension");
            }
            for (std::size_t i = 0; i < u.boxes.size(); ++i)
              for (std::size_t j = i + 1; j < u.boxes.size(); ++j)
                if (interiors_overlap(u.boxes[i], u.boxes[j]))
                  throw std::invalid_argument("boxes " + std::to_string(i) + " and " +
                                              std::to_string(j) + " overlap");
          }},
      shape);
}

double volume(const DomainShape& shape)
{
  validate(shape);
  return std::visit(
      overloaded{[](const Box& b) { return box_volume(b); },
                 [](const Ball& b) { return dimension_constants(b.n).omega * std::pow(b.radius, b.n); },
                 [](const Ellipse2D& e) { return std::numbers::pi * e.a * e.b; },
                 [](const Polygon2D& p) { return polygon_moments(p, vertex_mean(p)).area; },
                 [](const BoxUnion& u) {
                   double v = 0;
                   for (const auto& b : u.boxes) v += box_volume(b);
                   return v;
                 }},
      shape);
}

Point centroid(const DomainShape& shape)
{
  validate(shape);
  return std::visit(overloaded{[](const Box& b) { return box_centroid(b); },
                               [](const Ball& b) { return center_of(b); },
                               [](const Ellipse2D& e) { return Point{e.center[0], e.center[1]}; },
                               [](const Polygon2D& p) {
                                 const auto c = polygon_centroid(p);
                                 return Point{c[0], c[1]};
                               },
                               [](const BoxUnion& u) {
                                 Point c = zeros(int(u.boxes.front().sides.size()));
                                 double total = 0;
                                 for (const auto& b : u.boxes) {
                                   const double v = box_volume(b);
                                   const Point bc = box_centroid(b);
                                   for (std::size_t i = 0; i < c.size(); ++i) c[i] += v * bc[i];
                                   total += v;
                                 }
                                 for (double& x : c) x /= total;
                                 return c;
                               }},
                    shape);
}

double second_moment_about(const DomainShape& shape, const Point& a)
{
  validate(shape);
  require_dimension(a, dimension(shape), "probe point");
  return std::visit(
      overloaded{
          [&](const Box& b) { return box_moment_about(b, a); },
          [&](const Ball& b) {
            const auto dc = dimension_constants(b.n);
            const double vol = dc.omega * std::pow(b.radius, b.n);
            return double(b.n) / (b.n + 2) * vol * b.radius * b.radius +
                   vol * squared_distance(a, center_of(b));
          },
          [&](const Ellipse2D& e) {
            const double area = std::numbers::pi * e.a * e.b;
            return area * (e.a * e.a + e.b * e.b) / 4 +
                   area * squared_distance(a, Point{e.center[0], e.center[1]});
          },
          [&](const Polygon2D& p) { return polygon_moments(p, Vec2{a[0], a[1]}).polar; },
          [&](const BoxUnion& u) {
            double total = 0;
            for (const auto& b : u.boxes) total += box_moment_about(b, a);
            return total;
          }},
      shape);
}

double inertia_min(const DomainShape& shape)
{
  validate(shape);
  return std::visit(
      overloaded{[](const Box& b) {
                   double s2 = 0;
                   for (double s : b.sides) s2 += s * s;
                   return box_volume(b) * s2 / 12;
                 },
                 [](const Ball& b) {
                   const auto dc = dimension_constants(b.n);
                   return double(b.n) / (b.n + 2) * dc.omega * std::pow(b.radius, b.n + 2);
                 },
                 [](const Ellipse2D& e) {
                   return std::numbers::pi * e.a * e.b * (e.a * e.a + e.b * e.b) / 4;
                 },
                 [](const Polygon2D& p) { return polygon_moments(p, polygon_centroid(p)).polar; },
                 [&](const BoxUnion&) { return second_moment_about(shape, centroid(shape)); }},
      shape);
}

GeometrySummary summarize(const DomainShape& shape)
{
  return {dimension(shape), volume(shape), inertia_min(shape)};
}

IsoperimetricMomentCheck check_isoperimetric_moment(const DomainShape& shape)
{
  IsoperimetricMomentCheck c;
  c.lhs = inertia_min(shape);
  c.rhs = inertia_lower_bound(dimension(shape), volume(shape));
  c.ok = c.lhs >= c.rhs - 1e-12 * std::max(1.0, c.rhs);
  return c;
}

DomainShape translated(const DomainShape& shape, const Point& v)
{
  validate(shape);
  require_dimension(v, dimension(shape), "translation");
  auto shift = [&](Point p) {
    if (p.empty()) p = zeros(int(v.size()));
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += v[i];
    return p;
  };
  return std::visit(overloaded{[&](Box b) -> DomainShape {
                                 b.origin = shift(b.origin);
                                 return b;
                               },
                               [&](Ball b) -> DomainShape {
                                 b.center = shift(b.center);
                                 return b;
                               },
                               [&](Ellipse2D e) -> DomainShape {
                                 e.center[0] += v[0];
                                 e.center[1] += v[1];
                                 return e;
                               },
                               [&](Polygon2D p) -> DomainShape {
                                 for (auto& q : p.vertices) {
                                   q[0] += v[0];
                                   q[1] += v[1];
                                 }
                                 return p;
                               },
                               [&](BoxUnion u) -> DomainShape {
                                 for (auto& b : u.boxes) b.origin = shift(b.origin);
                                 return u;
                               }},
                    shape);
}

DomainShape scaled(const DomainShape& shape, double a)
{
  validate(shape);
  if (!(a > 0)) throw std::invalid_argument("scale factor must be positive");
  auto dilate = [&](Point p) {
    for (double& x : p) x *= a;
    return p;
  };
  auto dilate_box = [&](Box b) {
    for (double& s : b.sides) s *= a;
    b.origin = dilate(b.origin);
    return b;
  };
  return std::visit(overloaded{[&](const Box& b) -> DomainShape { return dilate_box(b); },
                               [&](Ball b) -> DomainShape {
                                 b.radius *= a;
                                 b.center = dilate(b.center);
                                 return b;
                               },
                               [&](Ellipse2D e) -> DomainShape {
                                 e.a *= a;
                                 e.b *= a;
                                 e.center[0] *= a;
                                 e.center[1] *= a;
                                 return e;
                               },
                               [&](Polygon2D p) -> DomainShape {
                                 for (auto& q : p.vertices) {
                                   q[0] *= a;
                                   q[1] *= a;
                                 }
                                 return p;
                               },
                               [&](BoxUnion u) -> DomainShape {
                                 for (auto& b : u.boxes) b = dilate_box(b);
                                 return u;
                               }},
                    shape);
}

}  // namespace eigenbound
