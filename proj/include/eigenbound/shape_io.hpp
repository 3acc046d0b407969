#pragma once

// JSON shape documents.
//
//   {"type": "box",       "dimension": 2, "sides": [1, 1], "origin": [0, 0]}
//   {"type": "ball",      "dimension": 3, "radius": 1, "center": [0, 0, 0]}
//   {"type": "ellipse",   "dimension": 2, "axes": [2, 1], "center": [0, 0]}
//   {"type": "polygon",   "dimension": 2, "vertices": [[0,0], [1,0], [1,1], [0,1]]}
//   {"type": "box_union", "dimension": 2,
//    "boxes": [{"sides": [1, 1]}, {"sides": [1, 1], "origin": [1, 0]}]}
//
// "origin", "center" and "name" are optional; "dimension" is required for
// balls and checked against the data otherwise. Unknown fields are errors.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "eigenbound/geometry.hpp"

namespace eigenbound {

class ShapeParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DomainShape parse_shape(const std::string& text);
DomainShape read_shape_file(const std::string& path);

/// Canonical document for a shape (parse_shape(shape_to_json(s)) == s).
std::string shape_to_json(const DomainShape& shape);

}  // namespace eigenbound
