#include "eigenbound/shape_io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace eigenbound {

namespace {

using nlohmann::json;

void reject_unknown(const json& doc, const std::set<std::string>& allowed, const std::string& where)
{
  for (const auto& [key, value] : doc.items())
    if (!allowed.count(key)) throw ShapeParseError("unknown field '" + key + "' in " + where);
}

const json& require(const json& doc, const std::string& key, const std::string& where)
{
  if (!doc.contains(key)) throw ShapeParseError("missing field '" + key + "' in " + where);
  return doc.at(key);
}

double number(const json& v, const std::string& field)
{
  if (!v.is_number()) throw ShapeParseError("field '" + field + "' must be a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& v, const std::string& field)
{
  if (!v.is_array()) throw ShapeParseError("field '" + field + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(number(x, field));
  return out;
}

Box parse_box(const json& doc, const std::string& where, const std::set<std::string>& extra = {})
{
  std::set<std::string> allowed{"sides", "origin"};
  allowed.insert(extra.begin(), extra.end());
  reject_unknown(doc, allowed, where);
  Box b;
  b.sides = numbers(require(doc, "sides", where), "sides");
  if (doc.contains("origin")) b.origin = numbers(doc.at("origin"), "origin");
  return b;
}

json point_json(const Point& p) { return json(p); }

}  // namespace

DomainShape parse_shape(const std::string& text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ShapeParseError(std::string("shape document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ShapeParseError("shape document must be a JSON object");
  const json& type_field = require(doc, "type", "shape document");
  if (!type_field.is_string()) throw ShapeParseError("field 'type' must be a string");
  const std::string type = type_field.get<std::string>();

  std::optional<int> dim;
  if (doc.contains("dimension")) {
    const auto& d = doc.at("dimension");
    if (!d.is_number_integer()) throw ShapeParseError("field 'dimension' must be an integer");
    dim = d.get<int>();
  }
  if (doc.contains("name") && !doc.at("name").is_string())
    throw ShapeParseError("field 'name' must be a string");

  DomainShape shape;
  const std::set<std::string> common{"type", "dimension", "name"};
  auto allowed = [&](std::initializer_list<std::string> fields) {
    std::set<std::string> s = common;
    s.insert(fields.begin(), fields.end());
    return s;
  };

  if (type == "box") {
    shape = parse_box(doc, "box", common);
  } else if (type == "ball") {
    reject_unknown(doc, allowed({"radius", "center"}), "ball");
    if (!dim) throw ShapeParseError("missing field 'dimension' in ball");
    Ball b;
    b.n = *dim;
    b.radius = number(require(doc, "radius", "ball"), "radius");
    if (doc.contains("center")) b.center = numbers(doc.at("center"), "center");
    shape = b;
  } else if (type == "ellipse") {
    reject_unknown(doc, allowed({"axes", "center"}), "ellipse");
    const auto axes = numbers(require(doc, "axes", "ellipse"), "axes");
    if (axes.size() != 2) throw ShapeParseError("field 'axes' must hold two semi-axes");
    Ellipse2D e{axes[0], axes[1], {0, 0}};
    if (doc.contains("center")) {
      const auto c = numbers(doc.at("center"), "center");
      if (c.size() != 2) throw ShapeParseError("field 'center' must have 2 coordinates");
      e.center = {c[0], c[1]};
    }
    shape = e;
  } else if (type == "polygon") {
    reject_unknown(doc, allowed({"vertices"}), "polygon");
    const json& verts = require(doc, "vertices", "polygon");
    if (!verts.is_array()) throw ShapeParseError("field 'vertices' must be an array of [x, y] pairs");
    Polygon2D p;
    for (const auto& v : verts) {
      const auto xy = numbers(v, "vertices");
      if (xy.size() != 2) throw ShapeParseError("field 'vertices' entries must be [x, y] pairs");
      p.vertices.push_back({xy[0], xy[1]});
    }
    shape = p;
  } else if (type == "box_union") {
    reject_unknown(doc, allowed({"boxes"}), "box_union");
    const json& boxes = require(doc, "boxes", "box_union");
    if (!boxes.is_array()) throw ShapeParseError("field 'boxes' must be an array");
    BoxUnion u;
    for (const auto& b : boxes) {
      if (!b.is_object()) throw ShapeParseError("field 'boxes' entries must be objects");
      u.boxes.push_back(parse_box(b, "box_union.boxes"));
    }
    shape = u;
  } else {
    throw ShapeParseError("unknown shape type '" + type + "'");
  }

  try {
    validate(shape);
  } catch (const std::invalid_argument& e) {
    throw ShapeParseError(std::string("invalid ") + type + ": " + e.what());
  }
  if (dim && *dim != dimension(shape))
    throw ShapeParseError("field 'dimension' is " + std::to_string(*dim) + " but the " + type +
                          " data has dimension " + std::to_string(dimension(shape)));
  return shape;
}

DomainShape read_shape_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw ShapeParseError("cannot open shape file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_shape(ss.str());
}

std::string shape_to_json(const DomainShape& shape)
{
  json doc;
  doc["type"] = shape_type(shape);
  doc["dimension"] = dimension(shape);
  auto box_json = [](const Box& b) {
    json j;
    j["sides"] = b.sides;
    if (!b.origin.empty()) j["origin"] = point_json(b.origin);
    return j;
  };
  if (const auto* b = std::get_if<Box>(&shape)) {
    doc.update(box_json(*b));
  } else if (const auto* ball = std::get_if<Ball>(&shape)) {
    doc["radius"] = ball->radius;
    if (!ball->center.empty()) doc["center"] = point_json(ball->center);
  } else if (const auto* e = std::get_if<Ellipse2D>(&shape)) {
    doc["axes"] = {e->a, e->b};
    doc["center"] = {e->center[0], e->center[1]};
  } else if (const auto* p = std::get_if<Polygon2D>(&shape)) {
    json verts = json::array();
    for (const auto& v : p->vertices) verts.push_back({v[0], v[1]});
    doc["vertices"] = verts;
  } else if (const auto* u = std::get_if<BoxUnion>(&shape)) {
    json boxes = json::array();
    for (const auto& b : u->boxes) boxes.push_back(box_json(b));
    doc["boxes"] = boxes;
  }
  return doc.dump();
}

}  // namespace eigenbound
