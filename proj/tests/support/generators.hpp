#pragma once

#include "flatfold/crease_pattern.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

namespace flatfold::testing {

inline Point2 pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

// Unit square with one interior vertex at the centre and creases to the four
// corners (diagonal) or edge midpoints (axis-aligned).
inline CreasePattern centre_star(bool axis_aligned, std::optional<MVAssignment> mv = std::nullopt) {
  std::vector<Point2> points;
  std::vector<std::size_t> boundary;
  if (axis_aligned) {
    points = {pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 1), pt(2, 2), pt(1, 2), pt(0, 2), pt(0, 1), pt(1, 1)};
    boundary = {0, 1, 2, 3, 4, 5, 6, 7};
    return CreasePattern(points, {{8, 3}, {8, 5}, {8, 7}, {8, 1}}, boundary, std::move(mv));
  }
  points = {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1), pt(Rational(1, 2), Rational(1, 2))};
  boundary = {0, 1, 2, 3};
  return CreasePattern(points, {{4, 0}, {4, 1}, {4, 2}, {4, 3}}, boundary, std::move(mv));
}

// Two degree-4 vertices P(4,4), Q(8,4) on a 12x8 sheet joined by crease 0.
// Creases: 0 PQ, 1 P-north, 2 P-west, 3 P-south, 4 Q-north, 5 Q-east, 6 Q-south.
inline CreasePattern two_vertex_grid(std::optional<MVAssignment> mv = std::nullopt) {
  std::vector<Point2> points{pt(4, 4), pt(8, 4),  pt(0, 0),  pt(4, 0), pt(8, 0), pt(12, 0),
                             pt(12, 4), pt(12, 8), pt(8, 8), pt(4, 8), pt(0, 8), pt(0, 4)};
  std::vector<std::size_t> boundary{2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  std::vector<Crease> creases{{0, 1}, {0, 9}, {0, 11}, {0, 3}, {1, 8}, {1, 6}, {1, 4}};
  return CreasePattern(points, creases, boundary, std::move(mv));
}

// Acute triangle A(0,0) B(6,0) C(3,4), each corner carrying two more creases
// out to the boundary so that every vertex satisfies Kawasaki exactly. The
// triangle's corner is the strictly smallest sector at each vertex, which
// forces every pair of triangle creases to take opposite labels: impossible
// for three creases, so the pattern cannot fold flat even though every local
// check passes. Crease 0 = AB, 1 = BC, 2 = CA.
inline CreasePattern triangle_witness() {
  std::vector<Point2> points{pt(0, 0),           pt(6, 0),          pt(3, 4),
                             pt(-10, -10),       pt(0, -10),        pt(6, -10),
                             pt(16, -10),        pt(16, Rational(15, 2)), pt(16, Rational(55, 4)),
                             pt(16, 14),         pt(-10, 14),       pt(-10, Rational(55, 4)),
                             pt(-10, Rational(15, 2))};
  std::vector<Crease> creases{{0, 1}, {1, 2}, {2, 0}, {0, 12}, {0, 4},
                              {1, 5}, {1, 7}, {2, 8}, {2, 11}};
  std::vector<std::size_t> boundary{3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  return CreasePattern(points, creases, boundary);
}

// Independent reflection arithmetic on complex numbers: reflection across the
// line through the origin at angle t is z -> e^{2it} conj(z).
struct ComplexIsometry {
  std::complex<double> rot{1, 0};
  std::complex<double> shift{0, 0};
  bool conj = false;  // z -> rot * (conj ? conj(z) : z) + shift

  static ComplexIsometry reflection_through_origin(double degrees) {
    return {std::polar(1.0, 2 * degrees * std::numbers::pi / 180.0), {0, 0}, true};
  }

  std::complex<double> operator()(std::complex<double> z) const {
    return rot * (conj ? std::conj(z) : z) + shift;
  }

  // this o other
  ComplexIsometry after(const ComplexIsometry& o) const {
    ComplexIsometry r;
    r.conj = conj != o.conj;
    r.rot = rot * (conj ? std::conj(o.rot) : o.rot);
    r.shift = rot * (conj ? std::conj(o.shift) : o.shift) + shift;
    return r;
  }
};

// Random planar pattern on a 12x12 sheet whose boundary carries a vertex at
// every even coordinate. Up to `max_interior` interior vertices on integer
// points, creases added at random where they keep the embedding planar, a few
// boundary-to-boundary chords, and every interior vertex of even degree >= 2.
// Returns nullopt when the random draw could not be completed.
template <class Rng>
std::optional<CreasePattern> random_planar_pattern(Rng& rng, std::size_t max_interior) {
  std::vector<Point2> points;
  std::vector<std::size_t> boundary;
  for (int x = 0; x < 12; x += 2) points.push_back(pt(x, 0));
  for (int y = 0; y < 12; y += 2) points.push_back(pt(12, y));
  for (int x = 12; x > 0; x -= 2) points.push_back(pt(x, 12));
  for (int y = 12; y > 0; y -= 2) points.push_back(pt(0, y));
  for (std::size_t i = 0; i < points.size(); ++i) boundary.push_back(i);
  const std::size_t boundary_count = points.size();

  std::uniform_int_distribution<int> coord(1, 11);
  std::uniform_int_distribution<std::size_t> count_dist(1, max_interior);
  const std::size_t interior = count_dist(rng);
  while (points.size() < boundary_count + interior) {
    Point2 p = pt(coord(rng), coord(rng));
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
  }

  std::vector<Crease> creases;
  std::vector<std::pair<std::size_t, std::size_t>> segments;
  for (std::size_t i = 0; i < boundary_count; ++i) segments.push_back({i, (i + 1) % boundary_count});
  std::vector<std::size_t> degree(points.size(), 0);

  // Every coordinate is an integer here, so the embedding tests run on int64.
  std::vector<std::array<long long, 2>> ip;
  for (const auto& q : points) ip.push_back({static_cast<long long>(q.x), static_cast<long long>(q.y)});
  auto orient = [&](std::size_t o, std::size_t a, std::size_t b) {
    const long long c = (ip[a][0] - ip[o][0]) * (ip[b][1] - ip[o][1]) - (ip[a][1] - ip[o][1]) * (ip[b][0] - ip[o][0]);
    return (c > 0) - (c < 0);
  };
  auto on_segment = [&](std::size_t w, std::size_t a, std::size_t b) {
    return orient(a, b, w) == 0 && std::min(ip[a][0], ip[b][0]) <= ip[w][0] &&
           ip[w][0] <= std::max(ip[a][0], ip[b][0]) && std::min(ip[a][1], ip[b][1]) <= ip[w][1] &&
           ip[w][1] <= std::max(ip[a][1], ip[b][1]);
  };
  auto admissible = [&](std::size_t a, std::size_t b) {
    if (a == b) return false;
    for (const auto& [c, d] : segments) {
      if ((c == a && d == b) || (c == b && d == a)) return false;
      std::optional<std::size_t> shared;
      if (c == a || c == b) shared = c;
      if (d == a || d == b) shared = d;
      if (shared) {
        const auto mine = *shared == a ? b : a;
        const auto theirs = *shared == c ? d : c;
        if (on_segment(mine, *shared, theirs) || on_segment(theirs, *shared, mine)) return false;
      } else {
        const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
        if (o1 * o2 < 0 && o3 * o4 < 0) return false;
        if (on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)) return false;
      }
    }
    for (std::size_t w = 0; w < points.size(); ++w) {
      if (w != a && w != b && on_segment(w, a, b)) return false;
    }
    if (a < boundary_count && b < boundary_count) {
      const long long mx = ip[a][0] + ip[b][0], my = ip[a][1] + ip[b][1];
      if (mx <= 0 || mx >= 24 || my <= 0 || my >= 24) return false;
    }
    return true;
  };
  auto add = [&](std::size_t a, std::size_t b) {
    creases.push_back({a, b});
    segments.push_back({a, b});
    ++degree[a];
    ++degree[b];
  };

  std::uniform_int_distribution<std::size_t> any_vertex(0, points.size() - 1);
  std::uniform_int_distribution<std::size_t> any_boundary(0, boundary_count - 1);
  std::uniform_int_distribution<int> chords(0, 2);
  for (int c = chords(rng), tries = 0; c > 0 && tries < 50; ++tries) {
    const auto a = any_boundary(rng), b = any_boundary(rng);
    if (admissible(a, b)) {
      add(a, b);
      --c;
    }
  }
  for (std::size_t v = boundary_count; v < points.size(); ++v) {
    std::uniform_int_distribution<int> want(2, 5);
    const int target = want(rng);
    for (int tries = 0; static_cast<int>(degree[v]) < target && tries < 80; ++tries) {
      const auto w = any_vertex(rng);
      if (admissible(v, w)) add(v, w);
    }
  }
  for (std::size_t v = boundary_count; v < points.size(); ++v) {
    for (int tries = 0; (degree[v] % 2 != 0 || degree[v] < 2) && tries < 200; ++tries) {
      const auto w = tries < 100 ? any_boundary(rng) : any_vertex(rng);
      if (w >= boundary_count && degree[w] % 2 == 0) continue;
      if (admissible(v, w)) add(v, w);
    }
  }
  for (std::size_t v = boundary_count; v < points.size(); ++v) {
    if (degree[v] % 2 != 0 || degree[v] < 2) return std::nullopt;
  }
  return normalize_pattern(CreasePattern(points, creases, boundary));
}

// Labels every crease so that each interior vertex with creases has local
// M - V = +-2. Randomized backtracking; nullopt if no such labelling exists.
template <class Rng>
std::optional<MVAssignment> random_local_maekawa_assignment(Rng& rng, const CreasePattern& p) {
  const std::size_t n = p.creases().size();
  std::vector<int> label(n, -1);  // 1 mountain, 0 valley
  std::vector<long> mountains(p.vertices().size(), 0);
  std::vector<long> remaining(p.vertices().size(), 0);
  for (std::size_t v = 0; v < p.vertices().size(); ++v) remaining[v] = static_cast<long>(p.degree(v));
  auto feasible = [&](std::size_t v) {
    if (!p.vertex(v).interior || p.degree(v) == 0) return true;
    const long d = static_cast<long>(p.degree(v));
    if (d % 2 != 0) return false;
    for (long target : {d / 2 + 1, d / 2 - 1}) {
      if (mountains[v] <= target && target <= mountains[v] + remaining[v]) return true;
    }
    return false;
  };
  std::bernoulli_distribution coin(0.5);
  std::function<bool(std::size_t)> solve = [&](std::size_t c) {
    if (c == n) return true;
    const auto& cr = p.crease(c);
    const bool first = coin(rng);
    for (int choice : {int(first), int(!first)}) {
      label[c] = choice;
      for (auto v : {cr.a, cr.b}) {
        mountains[v] += choice;
        --remaining[v];
      }
      if (feasible(cr.a) && feasible(cr.b) && solve(c + 1)) return true;
      for (auto v : {cr.a, cr.b}) {
        mountains[v] -= choice;
        ++remaining[v];
      }
    }
    label[c] = -1;
    return false;
  };
  if (!solve(0)) return std::nullopt;
  std::vector<Label> out;
  for (auto l : label) out.push_back(l == 1 ? Label::Mountain : Label::Valley);
  return MVAssignment(std::move(out));
}

}  // namespace flatfold::testing
