#pragma once

#include "flatfold/crease_pattern.hpp"

#include "json.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace flatfold::io {

// Comma- and/or whitespace-separated angles, each an integer, a finite decimal
// or p/q. Decimals convert exactly: "22.5" is 45/2.
inline AngleSequence parse_angles(std::string_view text) {
  std::vector<Rational> angles;
  std::size_t i = 0;
  bool expect_token = false;  // a comma was just consumed
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == ',') {
      if (angles.empty() || expect_token) throw ParseError("empty angle before ','", i);
      expect_token = true;
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const auto token = text.substr(start, i - start);
    const auto value = try_parse_rational(token);
    if (!value) throw ParseError("malformed angle '" + std::string(token) + "'", start);
    if (*value <= 0) throw ParseError("non-positive angle '" + std::string(token) + "'", start);
    angles.push_back(*value);
    expect_token = false;
  }
  if (expect_token) throw ParseError("trailing ','", text.size());
  if (angles.empty()) throw ParseError("no angles given", 0);
  return AngleSequence(std::move(angles));
}

// Letters M/V (either case), letter i labelling crease i.
inline MVAssignment parse_mv(std::string_view text, std::size_t expected) {
  std::vector<Label> labels;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (ch == 'M') {
      labels.push_back(Label::Mountain);
    } else if (ch == 'V') {
      labels.push_back(Label::Valley);
    } else {
      throw ParseError(std::string("assignment letters must be M or V, got '") + text[i] + "'", i);
    }
  }
  if (labels.size() != expected) {
    throw ParseError("assignment has " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(expected) + " creases",
                     text.size());
  }
  return MVAssignment(std::move(labels));
}

namespace detail {

using nlohmann::json;

// Shortest round-trip text of a double ("0.1", "1e-05") read back exactly.
inline Rational rational_from_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  std::string text(buf, res.ptr);
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
    exponent = std::stol(text.substr(e + 1));
    text.resize(e);
  }
  auto mantissa = try_parse_rational(text);
  if (!mantissa) throw SchemaError("cannot read number " + std::string(buf, res.ptr));
  Rational scale = 1;
  for (long k = 0; k < std::labs(exponent); ++k) scale *= 10;
  return exponent >= 0 ? Rational(*mantissa * scale) : Rational(*mantissa / scale);
}

inline Rational read_coordinate(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number_float()) return rational_from_double(value.get<double>());
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    if (auto q = try_parse_rational(text)) return *q;
    throw SchemaError(where + ": malformed rational '" + text + "'");
  }
  throw SchemaError(where + ": expected a number or rational string");
}

inline std::size_t read_index(const json& value, std::size_t limit, const std::string& where) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw SchemaError(where + ": expected a non-negative integer index");
  }
  const auto idx = value.get<unsigned long long>();
  if (idx >= limit) {
    throw SchemaError(where + ": index " + std::to_string(idx) + " out of range (" +
                      std::to_string(limit) + " vertices)");
  }
  return static_cast<std::size_t>(idx);
}

inline const json& require_array(const json& root, const char* key) {
  if (!root.contains(key) || !root.at(key).is_array()) {
    throw SchemaError(std::string("pattern needs an array \"") + key + "\"");
  }
  return root.at(key);
}

}  // namespace detail

// Reads the pattern JSON document and returns it validated and normalized.
//   { "vertices": [[x, y], ...], "creases": [[i, j], ...], "boundary": [i, ...],
//     "assignment": ["M" | "V", ...] }
// Coordinates are numbers or rational strings; "assignment" is optional.
inline CreasePattern parse_pattern(std::string_view document) {
  using detail::json;
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("pattern is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("pattern must be a JSON object");

  std::vector<Point2> points;
  const auto& vertices = detail::require_array(root, "vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& v = vertices[i];
    const auto where = "vertices[" + std::to_string(i) + "]";
    if (!v.is_array() || v.size() != 2) throw SchemaError(where + ": expected [x, y]");
    points.push_back({detail::read_coordinate(v[0], where), detail::read_coordinate(v[1], where)});
  }
  std::vector<Crease> creases;
  const auto& crease_list = detail::require_array(root, "creases");
  for (std::size_t c = 0; c < crease_list.size(); ++c) {
    const auto& e = crease_list[c];
    const auto where = "creases[" + std::to_string(c) + "]";
    if (!e.is_array() || e.size() != 2) throw SchemaError(where + ": expected [i, j]");
    creases.push_back({detail::read_index(e[0], points.size(), where),
                       detail::read_index(e[1], points.size(), where)});
  }
  std::vector<std::size_t> boundary;
  const auto& boundary_list = detail::require_array(root, "boundary");
  for (std::size_t i = 0; i < boundary_list.size(); ++i) {
    boundary.push_back(
        detail::read_index(boundary_list[i], points.size(), "boundary[" + std::to_string(i) + "]"));
  }
  std::optional<MVAssignment> assignment;
  if (root.contains("assignment") && !root.at("assignment").is_null()) {
    const auto& labels = root.at("assignment");
    if (!labels.is_array()) throw SchemaError("\"assignment\" must be an array");
    if (labels.size() != creases.size()) {
      throw SchemaError("assignment has " + std::to_string(labels.size()) + " labels for " +
                        std::to_string(creases.size()) + " creases");
    }
    std::vector<Label> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const auto text = labels[i].is_string() ? labels[i].get<std::string>() : std::string();
      if (text == "M" || text == "m") {
        out.push_back(Label::Mountain);
      } else if (text == "V" || text == "v") {
        out.push_back(Label::Valley);
      } else {
        throw SchemaError("assignment[" + std::to_string(i) + "] must be \"M\" or \"V\"");
      }
    }
    assignment = MVAssignment(std::move(out));
  }
  std::vector<bool> split;
  if (root.contains("split")) {
    split.assign(points.size(), false);
    const auto& list = root.at("split");
    if (!list.is_array()) throw SchemaError("\"split\" must be an array of vertex indices");
    for (std::size_t i = 0; i < list.size(); ++i) {
      split[detail::read_index(list[i], points.size(), "split[" + std::to_string(i) + "]")] = true;
    }
  }
  return normalize_pattern(CreasePattern(std::move(points), std::move(creases), std::move(boundary),
                                         std::move(assignment), std::move(split)));
}

inline CreasePattern read_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_pattern(buffer.str());
}

inline nlohmann::json pattern_to_json(const CreasePattern& p) {
  using detail::json;
  json out;
  out["vertices"] = json::array();
  json split = json::array();
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const auto& v = p.vertex(i);
    out["vertices"].push_back({to_string(v.position.x), to_string(v.position.y)});
    if (v.split) split.push_back(i);
  }
  out["creases"] = json::array();
  for (const auto& c : p.creases()) out["creases"].push_back({c.a, c.b});
  out["boundary"] = p.boundary();
  if (p.assignment()) {
    out["assignment"] = json::array();
    for (auto l : p.assignment()->labels()) out["assignment"].push_back(std::string(1, to_char(l)));
  }
  if (!split.empty()) out["split"] = split;
  return out;
}

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0 ? 0.0 : v);
  return buf;
}

}  // namespace detail

// Deterministic SVG 1.1 drawing. Boundary solid; mountains dash-dot; valleys
// dashed; unassigned creases thin solid. The y axis points up as in the
// pattern coordinates; the viewBox is the boundary's bounding box plus a 5%
// margin of its larger side.
inline std::string render_svg(const CreasePattern& p) {
  const auto polygon = p.boundary_polygon();
  double min_x = to_double(polygon[0].x), max_x = min_x;
  double min_y = to_double(polygon[0].y), max_y = min_y;
  for (const auto& q : polygon) {
    min_x = std::min(min_x, to_double(q.x));
    max_x = std::max(max_x, to_double(q.x));
    min_y = std::min(min_y, to_double(q.y));
    max_y = std::max(max_y, to_double(q.y));
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double margin = 0.05 * extent;
  const double unit = extent / 100.0;
  using detail::num;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << num(min_x - margin) << ' ' << num(-max_y - margin) << ' '
      << num(max_x - min_x + 2 * margin) << ' ' << num(max_y - min_y + 2 * margin) << "\">\n";
  svg << "  <polygon class=\"boundary\" fill=\"none\" stroke=\"#000000\" stroke-width=\""
      << num(0.6 * unit) << "\" points=\"";
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (i) svg << ' ';
    svg << num(to_double(polygon[i].x)) << ',' << num(-to_double(polygon[i].y));
  }
  svg << "\"/>\n";
  for (std::size_t c = 0; c < p.creases().size(); ++c) {
    const auto& a = p.vertex(p.crease(c).a).position;
    const auto& b = p.vertex(p.crease(c).b).position;
    svg << "  <line ";
    if (!p.assignment()) {
      svg << "class=\"crease unassigned\" stroke=\"#000000\" stroke-width=\"" << num(0.2 * unit) << '"';
    } else if ((*p.assignment())[c] == Label::Mountain) {
      svg << "class=\"crease mountain\" stroke=\"#c0392b\" stroke-width=\"" << num(0.4 * unit)
          << "\" stroke-dasharray=\"" << num(3 * unit) << ',' << num(unit) << ',' << num(0.5 * unit)
          << ',' << num(unit) << '"';
    } else {
      svg << "class=\"crease valley\" stroke=\"#2c5aa0\" stroke-width=\"" << num(0.4 * unit)
          << "\" stroke-dasharray=\"" << num(2 * unit) << ',' << num(unit) << '"';
    }
    svg << " x1=\"" << num(to_double(a.x)) << "\" y1=\"" << num(-to_double(a.y)) << "\" x2=\""
        << num(to_double(b.x)) << "\" y2=\"" << num(-to_double(b.y)) << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

inline void emit_svg(const CreasePattern& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << render_svg(p);
  if (!out) throw IoError("failed while writing " + path);
}

}  // namespace flatfold::io
