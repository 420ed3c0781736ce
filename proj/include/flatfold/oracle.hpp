#pragma once

// Brute-force ground truth for single-vertex questions. Nothing here depends on
// the vertex module: validity is decided by searching for a layer order of the
// folded sectors, not by any counting theorem.

#include "flatfold/core.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace flatfold::oracle {

struct Interval {
  Rational lo;
  Rational hi;

  bool strictly_contains(const Rational& x) const { return lo < x && x < hi; }
};

// The vertex folded flat, seen as a closed path on a line: crease j sits at
// folded direction d_j, and sector j runs from d_j to d_{j+1} with
// d_{j+1} = d_j + a_j for even j and d_j - a_j for odd j (0-based).
struct LayerModel {
  std::vector<int> sector_orientations;      // +1 face up, -1 face down; sector 0 is face up
  std::vector<Rational> folded_directions;   // one per crease, d_0 = 0
  std::vector<Interval> sector_intervals;    // one per sector
  std::vector<std::size_t> stacking;         // sector ids bottom to top; empty until solved

  std::size_t size() const noexcept { return sector_intervals.size(); }
};

inline LayerModel fold_directions(const AngleSequence& v) {
  const std::size_t n = v.size();
  LayerModel model;
  Rational d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    model.sector_orientations.push_back(j % 2 == 0 ? 1 : -1);
    model.folded_directions.push_back(d);
    const Rational next = j % 2 == 0 ? Rational(d + v[j]) : Rational(d - v[j]);
    model.sector_intervals.push_back({std::min(d, next), std::max(d, next)});
    d = next;
  }
  if (n % 2 != 0 || d != 0) {
    throw ClosureError("folded directions of " + v.to_string() + " do not close (end at " +
                       to_string(d) + ")");
  }
  return model;
}

namespace detail {

// Sectors on either side of crease j: (j-1, j).
inline std::pair<std::size_t, std::size_t> crease_sectors(std::size_t j, std::size_t n) {
  return {(j + n - 1) % n, j};
}

// Whether the sector after crease j must lie above the sector before it.
// Sector 0 is face up. A valley folds the face-up side onto itself, so the
// moving sector lands on top; a mountain sends it underneath. Seen from a
// face-down sector the roles swap.
inline bool after_is_above(const LayerModel& m, std::size_t j, Label label) {
  const auto before = crease_sectors(j, m.size()).first;
  const bool face_up = m.sector_orientations[before] > 0;
  return (label == Label::Valley) == face_up;
}

// +1 when the sectors at crease j extend towards larger directions.
inline int crease_side(const LayerModel& m, std::size_t j) {
  const auto& iv = m.sector_intervals[j];
  return iv.lo == m.folded_directions[j] ? 1 : -1;
}

inline bool interleaved(std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
  if (a1 > a2) std::swap(a1, a2);
  if (b1 > b2) std::swap(b1, b2);
  const bool b1_in = a1 < b1 && b1 < a2;
  const bool b2_in = a1 < b2 && b2 < a2;
  return b1_in != b2_in;
}

}  // namespace detail

// Checks one stacking (sector ids, bottom first) against three conditions:
//  (a) each crease orders its two sectors as its label demands;
//  (b) two creases at the same folded direction whose sectors lie on the same
//      side never interleave their sector pairs;
//  (c) a sector whose open interval strictly contains a crease's direction is
//      never sandwiched between that crease's two sectors.
// Intervals are compared open, so layers that only touch never conflict.
inline bool stacking_valid(const LayerModel& model, const MVAssignment& mv,
                           std::span<const std::size_t> stacking) {
  const std::size_t n = model.size();
  if (mv.size() != n) {
    throw PreconditionError("assignment size does not match the layer model");
  }
  std::vector<std::size_t> pos(n, n);
  if (stacking.size() != n) throw PreconditionError("stacking is not a permutation of the sectors");
  for (std::size_t level = 0; level < n; ++level) {
    const auto s = stacking[level];
    if (s >= n || pos[s] != n) throw PreconditionError("stacking is not a permutation of the sectors");
    pos[s] = level;
  }

  for (std::size_t j = 0; j < n; ++j) {
    const auto [before, after] = detail::crease_sectors(j, n);
    if ((pos[after] > pos[before]) != detail::after_is_above(model, j, mv[j])) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto [a1, a2] = detail::crease_sectors(j, n);
    for (std::size_t m = j + 1; m < n; ++m) {
      if (model.folded_directions[m] != model.folded_directions[j]) continue;
      if (detail::crease_side(model, m) != detail::crease_side(model, j)) continue;
      const auto [b1, b2] = detail::crease_sectors(m, n);
      if (detail::interleaved(pos[a1], pos[a2], pos[b1], pos[b2])) return false;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto [a1, a2] = detail::crease_sectors(j, n);
    const auto lo = std::min(pos[a1], pos[a2]);
    const auto hi = std::max(pos[a1], pos[a2]);
    for (std::size_t s = 0; s < n; ++s) {
      if (model.sector_intervals[s].strictly_contains(model.folded_directions[j]) && lo < pos[s] &&
          pos[s] < hi) {
        return false;
      }
    }
  }
  return true;
}

namespace detail {

// Builds the stack bottom-up and rejects a partial stack as soon as any
// condition of stacking_valid is already decided against it.
class StackSearch {
 public:
  StackSearch(const LayerModel& model, const MVAssignment& mv)
      : n_(model.size()), must_be_below_(n_), must_be_above_(n_), tortilla_(n_), taco_(n_),
        placed_(n_, false), pos_(n_, 0) {
    for (std::size_t j = 0; j < n_; ++j) {
      const auto [before, after] = crease_sectors(j, n_);
      if (after_is_above(model, j, mv[j])) {
        must_be_below_[after].push_back(before);
        must_be_above_[before].push_back(after);
      } else {
        must_be_below_[before].push_back(after);
        must_be_above_[after].push_back(before);
      }
      for (std::size_t s = 0; s < n_; ++s) {
        if (model.sector_intervals[s].strictly_contains(model.folded_directions[j])) {
          tortilla_[s].push_back(j);
        }
      }
      for (std::size_t m = 0; m < n_; ++m) {
        if (m != j && model.folded_directions[m] == model.folded_directions[j] &&
            crease_side(model, m) == crease_side(model, j)) {
          taco_[j].push_back(m);
        }
      }
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    order_.clear();
    if (extend()) return order_;
    return std::nullopt;
  }

 private:
  bool feasible(std::size_t x) const {
    for (auto y : must_be_below_[x]) {
      if (!placed_[y]) return false;
    }
    for (auto y : must_be_above_[x]) {
      if (placed_[y]) return false;
    }
    for (auto j : tortilla_[x]) {
      const auto [a, b] = crease_sectors(j, n_);
      if (placed_[a] != placed_[b]) return false;
    }
    // x closes the pair of crease x and of crease x+1.
    for (const std::size_t j : {x, (x + 1) % n_}) {
      const auto [a, b] = crease_sectors(j, n_);
      const auto partner = a == x ? b : a;
      if (!placed_[partner]) continue;
      const auto floor = pos_[partner];
      for (auto m : taco_[j]) {
        const auto [c, d] = crease_sectors(m, n_);
        const int inside = (placed_[c] && pos_[c] > floor) + (placed_[d] && pos_[d] > floor);
        if (inside == 1) return false;
      }
    }
    return true;
  }

  bool extend() {
    if (order_.size() == n_) return true;
    for (std::size_t x = 0; x < n_; ++x) {
      if (placed_[x] || !feasible(x)) continue;
      placed_[x] = true;
      pos_[x] = order_.size();
      order_.push_back(x);
      if (extend()) return true;
      order_.pop_back();
      placed_[x] = false;
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> must_be_below_;
  std::vector<std::vector<std::size_t>> must_be_above_;
  std::vector<std::vector<std::size_t>> tortilla_;
  std::vector<std::vector<std::size_t>> taco_;
  std::vector<bool> placed_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> order_;
};

}  // namespace detail

// Some stacking satisfying stacking_valid, or nullopt if none exists.
inline std::optional<std::vector<std::size_t>> find_stacking(const LayerModel& model,
                                                             const MVAssignment& mv) {
  if (mv.size() != model.size()) {
    throw PreconditionError("assignment size does not match the layer model");
  }
  return detail::StackSearch(model, mv).run();
}

struct OracleOptions {
  std::size_t max_creases = 10;
  // Skip assignments with M - V != +-2 before searching for a stacking.
  bool maekawa_prefilter = true;
  unsigned threads = 1;
};

namespace detail {

inline void require_capacity(const AngleSequence& v, const OracleOptions& options) {
  if (v.size() > options.max_creases) {
    throw CapacityError("exhaustive search is limited to " + std::to_string(options.max_creases) +
                        " creases, got " + std::to_string(v.size()));
  }
  if (v.size() >= 63) throw CapacityError("assignment masks are limited to 62 creases");
}

inline bool closes(const AngleSequence& v) {
  try {
    fold_directions(v);
    return true;
  } catch (const ClosureError&) {
    return false;
  }
}

inline bool maekawa_tally(std::size_t creases, unsigned long long mask) {
  const long m = std::popcount(mask);
  const long diff = 2 * m - static_cast<long>(creases);
  return diff == 2 || diff == -2;
}

}  // namespace detail

// An assignment is valid iff some layer order realizes it.
inline bool oracle_is_valid(const AngleSequence& v, const MVAssignment& mv,
                            const OracleOptions& options = {}) {
  detail::require_capacity(v, options);
  if (mv.size() != v.size()) {
    throw PreconditionError("assignment has " + std::to_string(mv.size()) + " labels for " +
                            std::to_string(v.size()) + " creases");
  }
  if (!detail::closes(v)) return false;
  return find_stacking(fold_directions(v), mv).has_value();
}

// Valid assignments among masks [first, last); bit i of a mask set means crease
// i is a mountain. Disjoint ranges can be searched concurrently and summed.
inline BigInt oracle_count_range(const AngleSequence& v, unsigned long long first,
                                 unsigned long long last, const OracleOptions& options = {}) {
  detail::require_capacity(v, options);
  if (!detail::closes(v)) return 0;
  const auto model = fold_directions(v);
  const std::size_t n = v.size();
  BigInt total = 0;
  for (auto mask = first; mask < last; ++mask) {
    if (options.maekawa_prefilter && !detail::maekawa_tally(n, mask)) continue;
    if (find_stacking(model, MVAssignment::from_mask(n, mask))) ++total;
  }
  return total;
}

// Number of the 2^(2n) assignments that admit a valid stacking.
inline BigInt oracle_count(const AngleSequence& v, const OracleOptions& options = {}) {
  detail::require_capacity(v, options);
  const unsigned long long masks = 1ULL << v.size();
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(masks)));
  if (threads == 1) return oracle_count_range(v, 0, masks, options);
  std::vector<std::future<BigInt>> parts;
  const unsigned long long chunk = (masks + threads - 1) / threads;
  for (unsigned long long first = 0; first < masks; first += chunk) {
    const auto last = std::min(masks, first + chunk);
    parts.push_back(std::async(std::launch::async, [&v, first, last, &options] {
      return oracle_count_range(v, first, last, options);
    }));
  }
  BigInt total = 0;
  for (auto& part : parts) total += part.get();
  return total;
}

// Every valid assignment, in increasing mask order.
inline std::vector<MVAssignment> oracle_enumerate(const AngleSequence& v,
                                                  const OracleOptions& options = {}) {
  detail::require_capacity(v, options);
  std::vector<MVAssignment> out;
  if (!detail::closes(v)) return out;
  const auto model = fold_directions(v);
  const std::size_t n = v.size();
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    if (options.maekawa_prefilter && !detail::maekawa_tally(n, mask)) continue;
    auto mv = MVAssignment::from_mask(n, mask);
    if (find_stacking(model, mv)) out.push_back(std::move(mv));
  }
  return out;
}

// Validity of labels on the k+2 creases bounding k+1 equal sectors when only
// those creases are folded. The loose ends are extended to sectors of
// (k+2)*angle and closed into a cone: for even k by one extra sector through
// two extra creases, for odd k (where the ends point the same way) by gluing
// them along one extra crease. The labels are valid iff some labelling of the
// extra creases folds the closed cone.
inline bool oracle_run_valid(const Rational& angle, std::size_t k, std::span<const Label> run_labels,
                             const OracleOptions& options = {}) {
  if (run_labels.size() != k + 2) {
    throw PreconditionError("a run of k+1 sectors needs k+2 labels");
  }
  const Rational side = angle * static_cast<long>(k + 2);
  std::vector<Rational> sectors{side};
  for (std::size_t j = 0; j <= k; ++j) sectors.push_back(angle);
  sectors.push_back(side);
  std::vector<std::size_t> closure{0};
  if (k % 2 == 0) {
    sectors.push_back(2 * side - angle);
    closure.push_back(k + 3);
  }
  const AngleSequence cone(std::move(sectors));
  const std::size_t n = cone.size();
  for (unsigned extra = 0; extra < (1u << closure.size()); ++extra) {
    std::vector<Label> labels(n, Label::Mountain);
    for (std::size_t j = 0; j < k + 2; ++j) labels[j + 1] = run_labels[j];
    for (std::size_t c = 0; c < closure.size(); ++c) {
      labels[closure[c]] = ((extra >> c) & 1u) ? Label::Mountain : Label::Valley;
    }
    if (oracle_is_valid(cone, MVAssignment(std::move(labels)), options)) return true;
  }
  return false;
}

}  // namespace flatfold::oracle
