#pragma once

#include "flatfold/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace flatfold {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

namespace geometry {

inline Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

inline int orientation(const Point2& o, const Point2& a, const Point2& b) {
  return sign(cross(o, a, b));
}

// p is collinear with [a, b] and inside its bounding box.
inline bool on_closed_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Closed segments [a,b] and [c,d] share at least one point.
inline bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_closed_segment(c, a, b) || on_closed_segment(d, a, b) || on_closed_segment(a, c, d) ||
         on_closed_segment(b, c, d);
}

// Segments [p,q1] and [p,q2] leave p in the same direction.
inline bool overlap_from_shared_endpoint(const Point2& p, const Point2& q1, const Point2& q2) {
  if (orientation(p, q1, q2) != 0) return false;
  const Rational dot = (q1.x - p.x) * (q2.x - p.x) + (q1.y - p.y) * (q2.y - p.y);
  return dot > 0;
}

// -1 outside, 0 on the boundary, +1 strictly inside.
inline int point_in_polygon(const Point2& p, const std::vector<Point2>& polygon) {
  const std::size_t n = polygon.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = polygon[i];
    const Point2& b = polygon[j];
    if (on_closed_segment(p, a, b)) return 0;
    if ((a.y > p.y) != (b.y > p.y)) {
      // x coordinate of the edge at height p.y, compared without division
      const Rational lhs = (p.x - a.x) * (b.y - a.y);
      const Rational rhs = (b.x - a.x) * (p.y - a.y);
      const bool left = (b.y - a.y) > 0 ? lhs < rhs : lhs > rhs;
      if (left) inside = !inside;
    }
  }
  return inside ? 1 : -1;
}

inline Rational signed_area2(const std::vector<Point2>& polygon) {
  Rational sum = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point2& a = polygon[i];
    const Point2& b = polygon[(i + 1) % polygon.size()];
    sum += a.x * b.y - b.x * a.y;
  }
  return sum;
}

// Strict weak order of direction vectors by counterclockwise angle from +x.
inline bool direction_less(const Point2& a, const Point2& b) {
  auto half = [](const Point2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

// Counterclockwise angle from direction u to direction w in degrees, in (0, 360].
// Exact when the angle is a multiple of 45 degrees: for rational vectors those
// are the only rational-degree angles, so anything else comes back approximate.
inline std::pair<Rational, bool> ccw_angle(const Point2& u, const Point2& w) {
  const Rational dot = u.x * w.x + u.y * w.y;
  const Rational crs = u.x * w.y - u.y * w.x;
  const int sd = sign(dot);
  const int sc = sign(crs);
  if (sc == 0) return {sd > 0 ? Rational(360) : Rational(180), true};
  if (sd == 0) return {sc > 0 ? Rational(90) : Rational(270), true};
  if (crs == dot) return {sc > 0 ? Rational(45) : Rational(225), true};
  if (crs == -dot) return {sc > 0 ? Rational(135) : Rational(315), true};
  double deg = std::atan2(to_double(crs), to_double(dot)) * 180.0 / std::numbers::pi;
  if (deg <= 0) deg += 360.0;
  return {Rational(deg), false};
}

}  // namespace geometry

struct Vertex {
  Point2 position;
  bool interior = false;
  // Degree-2 vertex inserted by normalize_pattern to split a boundary-to-boundary crease.
  bool split = false;
};

struct Crease {
  std::size_t a;
  std::size_t b;

  std::size_t other(std::size_t v) const { return v == a ? b : a; }
  bool touches(std::size_t v) const { return v == a || v == b; }
};

// Planar straight-line crease graph on a polygonal sheet. Construction checks
// the whole embedding, so every live instance is well-formed and immutable.
class CreasePattern {
 public:
  CreasePattern(std::vector<Point2> points, std::vector<Crease> creases,
                std::vector<std::size_t> boundary,
                std::optional<MVAssignment> assignment = std::nullopt,
                std::vector<bool> split_flags = {})
      : creases_(std::move(creases)), boundary_(std::move(boundary)),
        assignment_(std::move(assignment)) {
    if (!split_flags.empty() && split_flags.size() != points.size()) {
      throw StructuralError("split flag count does not match vertex count");
    }
    std::set<std::size_t> on_boundary(boundary_.begin(), boundary_.end());
    vertices_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      Vertex v;
      v.position = std::move(points[i]);
      v.interior = on_boundary.count(i) == 0;
      v.split = !split_flags.empty() && split_flags[i];
      vertices_.push_back(std::move(v));
    }
    validate();
    incident_.assign(vertices_.size(), {});
    for (std::size_t c = 0; c < creases_.size(); ++c) {
      incident_[creases_[c].a].push_back(c);
      incident_[creases_[c].b].push_back(c);
    }
  }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Crease>& creases() const noexcept { return creases_; }
  const std::vector<std::size_t>& boundary() const noexcept { return boundary_; }
  const std::optional<MVAssignment>& assignment() const noexcept { return assignment_; }

  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const Crease& crease(std::size_t c) const { return creases_.at(c); }
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }
  std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }

  bool is_interior_crease(std::size_t c) const {
    return vertices_[creases_[c].a].interior && vertices_[creases_[c].b].interior;
  }

  std::vector<Point2> boundary_polygon() const {
    std::vector<Point2> out;
    out.reserve(boundary_.size());
    for (auto v : boundary_) out.push_back(vertices_[v].position);
    return out;
  }

  std::vector<Point2> points() const {
    std::vector<Point2> out;
    out.reserve(vertices_.size());
    for (const auto& v : vertices_) out.push_back(v.position);
    return out;
  }

  std::vector<bool> split_flags() const {
    std::vector<bool> out;
    out.reserve(vertices_.size());
    for (const auto& v : vertices_) out.push_back(v.split);
    return out;
  }

  CreasePattern with_assignment(std::optional<MVAssignment> assignment) const {
    return CreasePattern(points(), creases_, boundary_, std::move(assignment), split_flags());
  }

 private:
  void validate() const {
    const std::size_t n = vertices_.size();
    if (boundary_.size() < 3) {
      throw StructuralError("boundary needs at least 3 vertices");
    }
    std::set<std::size_t> seen;
    for (auto v : boundary_) {
      if (v >= n) throw StructuralError("boundary references missing vertex " + std::to_string(v));
      if (!seen.insert(v).second) {
        throw StructuralError("boundary lists vertex " + std::to_string(v) + " twice");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (vertices_[i].position == vertices_[j].position) {
          throw StructuralError("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                " coincide");
        }
      }
    }
    std::set<std::pair<std::size_t, std::size_t>> crease_keys;
    for (std::size_t c = 0; c < creases_.size(); ++c) {
      const auto& cr = creases_[c];
      if (cr.a >= n || cr.b >= n) {
        throw StructuralError("crease " + std::to_string(c) + " has a dangling endpoint");
      }
      if (cr.a == cr.b) {
        throw StructuralError("crease " + std::to_string(c) + " is a self-loop");
      }
      if (!crease_keys.insert(std::minmax(cr.a, cr.b)).second) {
        throw StructuralError("crease " + std::to_string(c) + " duplicates another crease");
      }
    }
    if (assignment_ && assignment_->size() != creases_.size()) {
      throw StructuralError("assignment has " + std::to_string(assignment_->size()) +
                            " labels for " + std::to_string(creases_.size()) + " creases");
    }
    const auto polygon = boundary_polygon();
    if (geometry::signed_area2(polygon) == 0) {
      throw StructuralError("boundary polygon is degenerate");
    }

    // Creases plus boundary edges may meet only at shared endpoints.
    struct Segment {
      std::size_t a, b;
      std::string name;
    };
    std::vector<Segment> segments;
    for (std::size_t c = 0; c < creases_.size(); ++c) {
      segments.push_back({creases_[c].a, creases_[c].b, "crease " + std::to_string(c)});
    }
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
      const auto a = boundary_[i];
      const auto b = boundary_[(i + 1) % boundary_.size()];
      if (crease_keys.count(std::minmax(a, b))) {
        throw StructuralError("a crease runs along boundary edge " + std::to_string(i));
      }
      segments.push_back({a, b, "boundary edge " + std::to_string(i)});
    }
    auto pos = [&](std::size_t v) -> const Point2& { return vertices_[v].position; };
    for (std::size_t s = 0; s < segments.size(); ++s) {
      for (std::size_t t = s + 1; t < segments.size(); ++t) {
        const auto& p = segments[s];
        const auto& q = segments[t];
        std::optional<std::size_t> shared;
        if (p.a == q.a || p.a == q.b) shared = p.a;
        if (p.b == q.a || p.b == q.b) shared = p.b;
        bool bad = false;
        if (shared) {
          const auto p_other = p.a == *shared ? p.b : p.a;
          const auto q_other = q.a == *shared ? q.b : q.a;
          bad = geometry::overlap_from_shared_endpoint(pos(*shared), pos(p_other), pos(q_other));
        } else {
          bad = geometry::segments_intersect(pos(p.a), pos(p.b), pos(q.a), pos(q.b));
        }
        if (bad) {
          throw PlanarityError(p.name + " and " + q.name + " intersect away from a shared vertex");
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      for (const auto& s : segments) {
        if (s.a == v || s.b == v) continue;
        if (geometry::on_closed_segment(pos(v), pos(s.a), pos(s.b))) {
          throw PlanarityError("vertex " + std::to_string(v) + " lies on " + s.name);
        }
      }
      if (vertices_[v].interior && geometry::point_in_polygon(pos(v), polygon) != 1) {
        throw StructuralError("vertex " + std::to_string(v) +
                              " is not on the boundary list but lies outside the paper");
      }
    }
  }

  std::vector<Vertex> vertices_;
  std::vector<Crease> creases_;
  std::vector<std::size_t> boundary_;
  std::optional<MVAssignment> assignment_;
  std::vector<std::vector<std::size_t>> incident_;
};

// Splits every crease whose endpoints both lie on the boundary at its midpoint,
// so that every crease has at least one interior endpoint. Both halves keep the
// original label. Creases are renumbered in order: a split crease c becomes two
// consecutive creases.
inline CreasePattern normalize_pattern(const CreasePattern& p) {
  auto points = p.points();
  auto split = p.split_flags();
  std::vector<Crease> creases;
  std::vector<Label> labels;
  const auto& assignment = p.assignment();
  for (std::size_t c = 0; c < p.creases().size(); ++c) {
    const auto& cr = p.crease(c);
    const bool boundary_to_boundary = !p.vertex(cr.a).interior && !p.vertex(cr.b).interior;
    if (!boundary_to_boundary) {
      creases.push_back(cr);
      if (assignment) labels.push_back((*assignment)[c]);
      continue;
    }
    const auto& pa = p.vertex(cr.a).position;
    const auto& pb = p.vertex(cr.b).position;
    const std::size_t mid = points.size();
    points.push_back({(pa.x + pb.x) / 2, (pa.y + pb.y) / 2});
    split.push_back(true);
    creases.push_back({cr.a, mid});
    creases.push_back({mid, cr.b});
    if (assignment) {
      labels.push_back((*assignment)[c]);
      labels.push_back((*assignment)[c]);
    }
  }
  std::optional<MVAssignment> out_assignment;
  if (assignment) out_assignment = MVAssignment(std::move(labels));
  return CreasePattern(std::move(points), std::move(creases), p.boundary(),
                       std::move(out_assignment), std::move(split));
}

// Sector angles around an interior vertex, counterclockwise, plus the crease
// ids in the same order. Crease i of the star is creases[i]; sector i lies
// between creases[i] and creases[i+1]. The first crease is the one whose
// direction makes the smallest counterclockwise angle with +x.
struct VertexStar {
  AngleSequence angles;
  std::vector<std::size_t> creases;
};

inline VertexStar star_at(const CreasePattern& p, std::size_t v) {
  if (v >= p.vertices().size()) {
    throw StructuralError("no vertex " + std::to_string(v));
  }
  if (!p.vertex(v).interior) {
    throw UnsupportedError("vertex " + std::to_string(v) +
                           " is on the boundary; only interior vertices have a fold star");
  }
  const auto& incident = p.incident(v);
  if (incident.empty()) {
    throw PreconditionError("vertex " + std::to_string(v) + " has no creases");
  }
  const auto& origin = p.vertex(v).position;
  std::vector<std::pair<Point2, std::size_t>> dirs;
  for (auto c : incident) {
    const auto& q = p.vertex(p.crease(c).other(v)).position;
    dirs.push_back({{q.x - origin.x, q.y - origin.y}, c});
  }
  std::sort(dirs.begin(), dirs.end(), [](const auto& l, const auto& r) {
    return geometry::direction_less(l.first, r.first);
  });
  std::vector<Rational> angles;
  std::vector<std::size_t> ids;
  bool exact = true;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const auto& next = dirs[(i + 1) % dirs.size()].first;
    auto [angle, is_exact] = geometry::ccw_angle(dirs[i].first, next);
    exact = exact && is_exact;
    angles.push_back(std::move(angle));
    ids.push_back(dirs[i].second);
  }
  return {AngleSequence(std::move(angles), exact ? Exactness::Exact : Exactness::Approximate),
          std::move(ids)};
}

inline AngleSequence vertex_star(const CreasePattern& p, std::size_t v) {
  return star_at(p, v).angles;
}

}  // namespace flatfold
