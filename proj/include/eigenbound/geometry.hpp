#pragma once

// Volume, centroid and minimal second moment for the shape catalog.

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "eigenbound/operator_bounds.hpp"

namespace eigenbound {

using Point = std::vector<double>;

/// Axis-aligned box [origin, origin + sides]. An empty origin means 0.
struct Box {
  std::vector<double> sides;
  Point origin;
};

struct Ball {
  int n = 2;
  double radius = 1;
  Point center;  // empty means 0
};

/// Axis-aligned ellipse with semi-axes a (x) and b (y).
struct Ellipse2D {
  double a = 1;
  double b = 1;
  std::array<double, 2> center{0, 0};
};

/// Simple polygon, vertices in counterclockwise order, not repeated at the end.
struct Polygon2D {
  std::vector<std::array<double, 2>> vertices;
};

/// Boxes with pairwise disjoint interiors.
struct BoxUnion {
  std::vector<Box> boxes;
};

using DomainShape = std::variant<Box, Ball, Ellipse2D, Polygon2D, BoxUnion>;

std::string shape_type(const DomainShape& shape);
int dimension(const DomainShape& shape);

/// Throws std::invalid_argument describing the first violated invariant.
void validate(const DomainShape& shape);

double volume(const DomainShape& shape);
Point centroid(const DomainShape& shape);

/// int_Omega |x - a|^2 dx for an arbitrary point a.
double second_moment_about(const DomainShape& shape, const Point& a);

/// int_Omega |x - centroid|^2 dx, the minimum over all translates.
double inertia_min(const DomainShape& shape);

GeometrySummary summarize(const DomainShape& shape);

struct IsoperimetricMomentCheck {
  double lhs = 0;  // inertia_min
  double rhs = 0;  // ball value for the same volume
  bool ok = false;
};

IsoperimetricMomentCheck check_isoperimetric_moment(const DomainShape& shape);

DomainShape translated(const DomainShape& shape, const Point& v);
/// Dilation x -> a x about the origin, a > 0.
DomainShape scaled(const DomainShape& shape, double a);

}  // namespace eigenbound
