#pragma once

#include "flatfold/crease_pattern.hpp"
#include "flatfold/vertex.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flatfold::pattern {

// Label attached to every multi-vertex check: passing proves nothing about
// global foldability, failing rules it out.
inline constexpr const char* kNecessaryOnly = "necessary only";

// Affine isometry x -> M x + t in floating point.
struct ReflectionMap {
  std::array<double, 4> m{1, 0, 0, 1};  // row-major 2x2
  std::array<double, 2> t{0, 0};

  static ReflectionMap identity() { return {}; }

  // Reflection across the line through (px, py) with direction angle `degrees`.
  static ReflectionMap across_line(double px, double py, double degrees) {
    const double rad = degrees * std::numbers::pi / 180.0;
    const double c = std::cos(2 * rad);
    const double s = std::sin(2 * rad);
    ReflectionMap r;
    r.m = {c, s, s, -c};
    r.t = {px - (c * px + s * py), py - (s * px - c * py)};
    return r;
  }

  std::array<double, 2> apply(double x, double y) const {
    return {m[0] * x + m[1] * y + t[0], m[2] * x + m[3] * y + t[1]};
  }

  // (*this) o other: apply `other` first.
  ReflectionMap then_after(const ReflectionMap& other) const {
    ReflectionMap r;
    r.m = {m[0] * other.m[0] + m[1] * other.m[2], m[0] * other.m[1] + m[1] * other.m[3],
           m[2] * other.m[0] + m[3] * other.m[2], m[2] * other.m[1] + m[3] * other.m[3]};
    r.t = {m[0] * other.t[0] + m[1] * other.t[1] + t[0], m[2] * other.t[0] + m[3] * other.t[1] + t[1]};
    return r;
  }

  double determinant() const { return m[0] * m[3] - m[1] * m[2]; }

  // Largest absolute entry of (M - I, t).
  double deviation_from_identity() const {
    return std::max({std::abs(m[0] - 1), std::abs(m[1]), std::abs(m[2]), std::abs(m[3] - 1),
                     std::abs(t[0]), std::abs(t[1])});
  }

  // Rotation angle of the linear part in (-180, 180]; meaningful when det = +1.
  double rotation_degrees() const { return std::atan2(m[2], m[0]) * 180.0 / std::numbers::pi; }
};

// Same map in exact arithmetic. Reflection across a line through rational
// points has rational coefficients, so compositions stay exact.
struct ExactAffine {
  Rational m00 = 1, m01 = 0, m10 = 0, m11 = 1, tx = 0, ty = 0;

  static ExactAffine reflection(const Point2& a, const Point2& b) {
    const Rational dx = b.x - a.x;
    const Rational dy = b.y - a.y;
    const Rational q = dx * dx + dy * dy;
    ExactAffine r;
    r.m00 = (dx * dx - dy * dy) / q;
    r.m01 = 2 * dx * dy / q;
    r.m10 = r.m01;
    r.m11 = -r.m00;
    r.tx = a.x - (r.m00 * a.x + r.m01 * a.y);
    r.ty = a.y - (r.m10 * a.x + r.m11 * a.y);
    return r;
  }

  ExactAffine then_after(const ExactAffine& o) const {
    ExactAffine r;
    r.m00 = m00 * o.m00 + m01 * o.m10;
    r.m01 = m00 * o.m01 + m01 * o.m11;
    r.m10 = m10 * o.m00 + m11 * o.m10;
    r.m11 = m10 * o.m01 + m11 * o.m11;
    r.tx = m00 * o.tx + m01 * o.ty + tx;
    r.ty = m10 * o.tx + m11 * o.ty + ty;
    return r;
  }

  bool is_identity() const { return m00 == 1 && m01 == 0 && m10 == 0 && m11 == 1 && tx == 0 && ty == 0; }

  ReflectionMap to_double() const {
    ReflectionMap r;
    r.m = {to_double_(m00), to_double_(m01), to_double_(m10), to_double_(m11)};
    r.t = {to_double_(tx), to_double_(ty)};
    return r;
  }

 private:
  static double to_double_(const Rational& q) { return flatfold::to_double(q); }
};

inline ReflectionMap reflection(std::size_t crease, const CreasePattern& p) {
  const auto& c = p.crease(crease);
  const auto& a = p.vertex(c.a).position;
  const auto& b = p.vertex(c.b).position;
  if (a == b) throw StructuralError("crease " + std::to_string(crease) + " has zero length");
  return ExactAffine::reflection(a, b).to_double();
}

struct Crossing {
  std::size_t crease;
  double x;
  double y;
};

struct ClosedCurve {
  std::vector<Crossing> crossings;  // in the order the curve meets them
  bool vertex_avoiding = true;
};

enum class TraceStatus { Identity, NotIdentity, OddCrossings };

inline const char* to_string(TraceStatus s) {
  switch (s) {
    case TraceStatus::Identity: return "identity";
    case TraceStatus::NotIdentity: return "not identity";
    case TraceStatus::OddCrossings: return "odd crossing count";
  }
  return "?";
}

struct TraceResult {
  ReflectionMap map;
  bool is_identity = false;
  TraceStatus status = TraceStatus::NotIdentity;
  double deviation = 0;
};

inline constexpr double kIdentityTolerance = 1e-9;

// Composes R(l1) R(l2) ... R(ln) for maps given in crossing order.
inline TraceResult trace_reflections(std::span<const ReflectionMap> maps,
                                     double tolerance = kIdentityTolerance) {
  TraceResult result;
  for (const auto& r : maps) result.map = result.map.then_after(r);
  result.deviation = result.map.deviation_from_identity();
  if (maps.size() % 2 != 0) {
    // An odd product reverses orientation and can never be the identity.
    result.status = TraceStatus::OddCrossings;
    return result;
  }
  result.is_identity = result.deviation <= tolerance;
  result.status = result.is_identity ? TraceStatus::Identity : TraceStatus::NotIdentity;
  return result;
}

inline TraceResult reflection_trace(const CreasePattern& p, const ClosedCurve& curve,
                                    double tolerance = kIdentityTolerance) {
  if (curve.crossings.empty()) throw PreconditionError("closed curve crosses no creases");
  if (!curve.vertex_avoiding) throw PreconditionError("closed curve must avoid vertices");
  std::vector<ReflectionMap> maps;
  for (const auto& x : curve.crossings) {
    if (x.crease >= p.creases().size()) {
      throw PreconditionError("curve crosses missing crease " + std::to_string(x.crease));
    }
    maps.push_back(reflection(x.crease, p));
  }
  return trace_reflections(maps, tolerance);
}

namespace detail {

inline double distance(const Point2& a, const Point2& b) {
  return std::hypot(to_double(a.x - b.x), to_double(a.y - b.y));
}

inline double distance_to_segment(const Point2& p, const Point2& a, const Point2& b) {
  const double ax = to_double(a.x), ay = to_double(a.y);
  const double bx = to_double(b.x), by = to_double(b.y);
  const double px = to_double(p.x), py = to_double(p.y);
  const double dx = bx - ax, dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double u = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0;
  u = std::clamp(u, 0.0, 1.0);
  return std::hypot(px - (ax + u * dx), py - (ay + u * dy));
}

}  // namespace detail

// A circle around interior vertex v small enough to meet only v's creases,
// listing them counterclockwise in the order of vertex_star.
inline ClosedCurve curve_around_vertex(const CreasePattern& p, std::size_t v) {
  const auto star = star_at(p, v);
  const auto& centre = p.vertex(v).position;
  double clearance = std::numeric_limits<double>::infinity();
  for (std::size_t w = 0; w < p.vertices().size(); ++w) {
    if (w != v) clearance = std::min(clearance, detail::distance(centre, p.vertex(w).position));
  }
  for (std::size_t c = 0; c < p.creases().size(); ++c) {
    const auto& cr = p.crease(c);
    if (cr.touches(v)) continue;
    clearance = std::min(clearance, detail::distance_to_segment(centre, p.vertex(cr.a).position,
                                                                p.vertex(cr.b).position));
  }
  const auto& boundary = p.boundary();
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    clearance = std::min(clearance,
                         detail::distance_to_segment(centre, p.vertex(boundary[i]).position,
                                                     p.vertex(boundary[(i + 1) % boundary.size()]).position));
  }
  if (!(clearance > 0) || !std::isfinite(clearance)) {
    throw StructuralError("no vertex-avoiding circle fits around vertex " + std::to_string(v));
  }
  const double radius = clearance / 2;
  ClosedCurve curve;
  const double cx = to_double(centre.x), cy = to_double(centre.y);
  for (auto c : star.creases) {
    const auto& q = p.vertex(p.crease(c).other(v)).position;
    const double dx = to_double(q.x) - cx, dy = to_double(q.y) - cy;
    const double len = std::hypot(dx, dy);
    curve.crossings.push_back({c, cx + radius * dx / len, cy + radius * dy / len});
  }
  return curve;
}

// Kawasaki at v decided exactly from coordinates, without measuring angles:
// around a point of a flat sheet the product of the reflections in the
// incident crease lines is the identity iff the alternating angle sum vanishes.
inline bool exact_reflection_identity(const CreasePattern& p, std::size_t v) {
  const auto star = star_at(p, v);
  if (star.creases.size() % 2 != 0) return false;
  ExactAffine product;
  for (auto c : star.creases) {
    const auto& cr = p.crease(c);
    product = product.then_after(
        ExactAffine::reflection(p.vertex(cr.a).position, p.vertex(cr.b).position));
  }
  return product.is_identity();
}

inline bool is_normalized(const CreasePattern& p) {
  for (const auto& c : p.creases()) {
    if (!p.vertex(c.a).interior && !p.vertex(c.b).interior) return false;
  }
  return true;
}

namespace detail {

inline void require_normalized(const CreasePattern& p, const char* op) {
  if (!is_normalized(p)) {
    throw PreconditionError(std::string(op) + " needs a normalized pattern (run normalize_pattern)");
  }
}

}  // namespace detail

struct VertexKawasaki {
  std::size_t vertex;
  std::size_t degree;
  AngleSequence angles;
  bool angles_exact;
  bool split;
  bool passes;
};

// Kawasaki at every interior vertex that carries creases. Stars whose angles
// are exact multiples of 45 degrees are checked on the angles; others are
// flagged approximate and decided by exact reflection composition instead.
inline std::vector<VertexKawasaki> local_kawasaki_all(const CreasePattern& p) {
  detail::require_normalized(p, "local_kawasaki_all");
  std::vector<VertexKawasaki> report;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    if (!p.vertex(v).interior || p.degree(v) == 0) continue;
    auto angles = vertex_star(p, v);
    const bool exact = angles.exact();
    const bool passes = exact ? vertex::kawasaki(angles) : exact_reflection_identity(p, v);
    report.push_back({v, p.degree(v), std::move(angles), exact, p.vertex(v).split, passes});
  }
  return report;
}

struct MaekawaReport {
  PatternTally tally;
  // Unset when some interior vertex breaks local Maekawa.
  std::optional<bool> holds;
  long lhs = 0;  // M - V
  long rhs = 0;  // 2U - 2D - M_i + V_i
  std::vector<std::size_t> violating_vertices;
  std::size_t degree_two_vertices = 0;  // counted in U/D by the sign of their two equal labels
};

// M - V = 2U - 2D - M_i + V_i over a normalized, fully labelled pattern.
// Every interior vertex with creases must satisfy local M - V = +-2, which
// also classifies it as up (+2) or down (-2). Degree-2 vertices take part like
// any other: their two labels must agree and they count as up or down.
inline MaekawaReport generalized_maekawa(const CreasePattern& p) {
  detail::require_normalized(p, "generalized_maekawa");
  if (!p.assignment()) throw PreconditionError("generalized_maekawa needs an MV assignment");
  const auto& mv = *p.assignment();
  MaekawaReport report;
  auto& tally = report.tally;
  for (std::size_t c = 0; c < p.creases().size(); ++c) {
    const bool mountain = mv[c] == Label::Mountain;
    (mountain ? tally.mountains : tally.valleys) += 1;
    if (p.is_interior_crease(c)) (mountain ? tally.interior_mountains : tally.interior_valleys) += 1;
  }
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    if (!p.vertex(v).interior || p.degree(v) == 0) continue;
    long local = 0;
    for (auto c : p.incident(v)) local += mv[c] == Label::Mountain ? 1 : -1;
    if (local == 2) {
      ++tally.up_vertices;
    } else if (local == -2) {
      ++tally.down_vertices;
    } else {
      report.violating_vertices.push_back(v);
    }
    if (p.degree(v) == 2) ++report.degree_two_vertices;
  }
  report.lhs = tally.mountains - tally.valleys;
  report.rhs = 2 * tally.up_vertices - 2 * tally.down_vertices - tally.interior_mountains +
               tally.interior_valleys;
  if (report.violating_vertices.empty()) report.holds = report.lhs == report.rhs;
  return report;
}

}  // namespace flatfold::pattern
