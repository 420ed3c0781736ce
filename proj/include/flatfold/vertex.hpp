#pragma once

#include "flatfold/core.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flatfold::vertex {

// k+1 consecutive equal sectors start, ..., start+k (cyclic). The run governs
// the k+2 creases start, ..., start+k+1.
struct RunCondition {
  std::size_t start = 0;
  std::size_t k = 0;
  Rational angle;

  std::size_t length() const noexcept { return k + 1; }

  std::vector<std::size_t> creases(std::size_t sector_count) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < k + 2; ++j) out.push_back((start + j) % sector_count);
    return out;
  }

  // Admissible values of M - V over the covered creases.
  std::vector<long> required_tally() const {
    if (k % 2 == 0) return {0};
    return {-1, 1};
  }

  friend bool operator==(const RunCondition&, const RunCondition&) = default;
};

namespace detail {

inline void require_exact(const AngleSequence& v, const char* op) {
  if (!v.exact()) {
    throw ExactnessError(std::string(op) + " needs exact angles; " + v.to_string() +
                         " was measured approximately");
  }
}

}  // namespace detail

// a1 - a2 + a3 - ... - a2n.
inline Rational alternating_sum(const AngleSequence& v) {
  if (!v.even()) {
    throw ParityError("alternating sum needs an even number of angles, got " +
                      std::to_string(v.size()));
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i % 2 == 0) {
      sum += v[i];
    } else {
      sum -= v[i];
    }
  }
  return sum;
}

// Flat-foldability of a single vertex, on flat paper or at a cone apex.
inline bool kawasaki(const AngleSequence& v) { return v.even() && alternating_sum(v) == 0; }

inline bool maekawa_check(const MVAssignment& mv) { return std::labs(mv.m_minus_v()) == 2; }

// Every maximal block of equal consecutive angles, ordered by start index.
// Empty when all angles are equal (the whole cycle is one block with no ends).
inline std::vector<RunCondition> maximal_runs(const AngleSequence& v) {
  detail::require_exact(v, "maximal_runs");
  std::vector<RunCondition> runs;
  if (v.all_equal()) return runs;
  const std::size_t n = v.size();
  std::size_t seam = 0;
  while (v.cyclic(static_cast<std::ptrdiff_t>(seam) - 1) == v[seam]) ++seam;
  std::size_t offset = 0;
  while (offset < n) {
    const std::size_t start = (seam + offset) % n;
    std::size_t length = 1;
    while (offset + length < n && v[(start + length) % n] == v[start]) ++length;
    runs.push_back({start, length - 1, v[start]});
    offset += length;
  }
  std::sort(runs.begin(), runs.end(),
            [](const RunCondition& a, const RunCondition& b) { return a.start < b.start; });
  return runs;
}

// Maximal equal runs whose two cyclic neighbours are strictly larger. Non-empty
// unless all angles are equal: a block of the minimum angle always qualifies.
inline std::vector<RunCondition> find_runs(const AngleSequence& v) {
  std::vector<RunCondition> out;
  for (auto& run : maximal_runs(v)) {
    const auto before = v.cyclic(static_cast<std::ptrdiff_t>(run.start) - 1);
    const auto after = v.cyclic(static_cast<std::ptrdiff_t>(run.start + run.k + 1));
    if (before > run.angle && after > run.angle) out.push_back(std::move(run));
  }
  return out;
}

// Validity test for the creases bounding an equal-angle run taken in isolation:
// M - V over creases start..start+k+1 must be 0 for even k and +-1 for odd k.
inline bool run_validity(const AngleSequence& v, const RunCondition& run, const MVAssignment& mv) {
  detail::require_exact(v, "run_validity");
  const std::size_t n = v.size();
  if (mv.size() != n) {
    throw PreconditionError("assignment has " + std::to_string(mv.size()) + " labels for " +
                            std::to_string(n) + " creases");
  }
  if (run.start >= n || run.k + 1 >= n) {
    throw PreconditionError("run does not fit inside the sequence");
  }
  for (std::size_t j = 0; j <= run.k; ++j) {
    if (v[(run.start + j) % n] != run.angle) {
      throw PreconditionError("run angles are not all equal to " + to_string(run.angle));
    }
  }
  long tally = 0;
  for (auto c : run.creases(n)) tally += mv[c] == Label::Mountain ? 1 : -1;
  return run.k % 2 == 0 ? tally == 0 : std::labs(tally) == 1;
}

// Decides validity of an assignment by repeatedly crimping away a sector that
// is no larger than either neighbour and whose two creases disagree. Such a
// crimp preserves validity in both directions; the process stops at an
// all-equal vertex (valid iff M - V = +-2) or when no crimp applies (invalid).
inline bool crimp_validity(const AngleSequence& v, const MVAssignment& mv) {
  detail::require_exact(v, "crimp_validity");
  if (mv.size() != v.size()) {
    throw PreconditionError("assignment has " + std::to_string(mv.size()) + " labels for " +
                            std::to_string(v.size()) + " creases");
  }
  if (!kawasaki(v)) {
    throw NotFlatFoldableError("crimp_validity: " + v.to_string() + " fails Kawasaki");
  }
  std::vector<Rational> angles = v.degrees();
  std::vector<Label> labels(mv.labels().begin(), mv.labels().end());

  while (true) {
    const std::size_t n = angles.size();
    const bool all_equal =
        std::all_of(angles.begin(), angles.end(), [&](const Rational& a) { return a == angles[0]; });
    if (all_equal) {
      return std::labs(MVAssignment(labels).m_minus_v()) == 2;
    }
    std::optional<std::size_t> site;
    for (std::size_t i = 0; i < n && !site; ++i) {
      const auto& prev = angles[(i + n - 1) % n];
      const auto& next = angles[(i + 1) % n];
      if (prev >= angles[i] && angles[i] <= next && labels[i] != labels[(i + 1) % n]) site = i;
    }
    if (!site) return false;

    // Rotate so the merged sectors are 0, 1, 2; creases 1 and 2 disappear.
    const std::size_t r = (*site + n - 1) % n;
    std::vector<Rational> next_angles;
    std::vector<Label> next_labels;
    next_angles.push_back(angles[r] - angles[(r + 1) % n] + angles[(r + 2) % n]);
    next_labels.push_back(labels[r]);
    for (std::size_t j = 3; j < n; ++j) {
      next_angles.push_back(angles[(r + j) % n]);
      next_labels.push_back(labels[(r + j) % n]);
    }
    angles = std::move(next_angles);
    labels = std::move(next_labels);
  }
}

// (2^n, 2 * C(2n, n-1)) for a vertex of degree 2n.
inline std::pair<BigInt, BigInt> bounds(const AngleSequence& v) {
  if (!v.even()) {
    throw ParityError("bounds need an even number of angles, got " + std::to_string(v.size()));
  }
  const auto n = static_cast<unsigned>(v.size() / 2);
  return {pow2(n), 2 * binomial(2 * n, n - 1)};
}

// Picks which candidate run to reduce next; returns an index into `runs`.
using RunSelector = std::function<std::size_t(const AngleSequence&, const std::vector<RunCondition>&)>;

// Smallest angle first, then smallest start index.
inline std::size_t smallest_run_first(const AngleSequence&, const std::vector<RunCondition>& runs) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].angle < runs[best].angle ||
        (runs[i].angle == runs[best].angle && runs[i].start < runs[best].start)) {
      best = i;
    }
  }
  return best;
}

namespace detail {

// Replaces the cyclic block [first, first+width) by `replacement` (possibly
// empty). Blocks that cross the end of the sequence are rotated to the front.
inline std::vector<Rational> splice(const AngleSequence& v, std::size_t first, std::size_t width,
                                    const std::vector<Rational>& replacement) {
  const std::size_t n = v.size();
  std::vector<Rational> base = v.degrees();
  if (first + width > n) {
    base = v.rotated(first).degrees();
    first = 0;
  }
  std::vector<Rational> out(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(first));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), base.begin() + static_cast<std::ptrdiff_t>(first + width), base.end());
  return out;
}

}  // namespace detail

// Number of valid mountain-valley assignments of a flat-foldable vertex, by the
// equal-run recursion. Each step removes a run bounded by strictly larger
// angles: even k merges the run and both neighbours into one sector and
// multiplies by C(k+2, (k+2)/2); odd k deletes the run and multiplies by
// C(k+2, (k+1)/2). The all-equal sequence of 2n angles closes with 2*C(2n, n-1).
inline CountResult count_mv(const AngleSequence& v, const RunSelector& select = smallest_run_first) {
  detail::require_exact(v, "count_mv");
  if (!kawasaki(v)) {
    throw NotFlatFoldableError("count_mv: " + v.to_string() + " fails Kawasaki");
  }
  CountResult result;
  result.bounds = bounds(v);

  AngleSequence current = v;
  BigInt product = 1;
  while (!current.all_equal()) {
    const auto runs = find_runs(current);
    const auto chosen = select(current, runs);
    if (chosen >= runs.size()) throw PreconditionError("run selector returned an invalid index");
    const RunCondition& run = runs[chosen];
    const std::size_t n = current.size();
    const unsigned k = static_cast<unsigned>(run.k);

    ReductionStep step{run.start, run.length(), 0, current};
    std::vector<Rational> residual;
    if (k % 2 == 0) {
      // Kawasaki rules out a run whose two neighbours are the same sector.
      if (k + 3 > n) throw PreconditionError("even run leaves no room for a merge");
      step.factor = binomial(k + 2, (k + 2) / 2);
      const std::size_t first = (run.start + n - 1) % n;
      const Rational merged = current[first] - run.angle + current.cyclic(
          static_cast<std::ptrdiff_t>(run.start + k + 1));
      residual = detail::splice(current, first, k + 3, {merged});
    } else {
      step.factor = binomial(k + 2, (k + 1) / 2);
      residual = detail::splice(current, run.start, k + 1, {});
    }
    product *= step.factor;
    current = AngleSequence(std::move(residual));
    step.residual = current;
    result.trace.push_back(std::move(step));
  }
  const auto half = static_cast<unsigned>(current.size() / 2);
  result.base_value = 2 * binomial(2 * half, half - 1);
  result.count = product * result.base_value;
  return result;
}

}  // namespace flatfold::vertex
