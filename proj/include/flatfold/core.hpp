#pragma once

#include "flatfold/errors.hpp"
#include "flatfold/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flatfold {

enum class Label : unsigned char { Mountain, Valley };

constexpr Label opposite(Label label) noexcept {
  return label == Label::Mountain ? Label::Valley : Label::Mountain;
}

constexpr char to_char(Label label) noexcept { return label == Label::Mountain ? 'M' : 'V'; }

// A sector angle in exact rational degrees; always strictly positive.
class Angle {
 public:
  explicit Angle(Rational degrees) : degrees_(std::move(degrees)) {
    if (degrees_ <= 0) {
      throw PreconditionError("sector angle must be positive, got " + to_string(degrees_));
    }
  }

  const Rational& degrees() const noexcept { return degrees_; }

  friend bool operator==(const Angle& a, const Angle& b) { return a.degrees_ == b.degrees_; }
  friend bool operator<(const Angle& a, const Angle& b) { return a.degrees_ < b.degrees_; }

 private:
  Rational degrees_;
};

enum class SurfaceKind { Flat, Cone };

// Whether angle values are exact degree measures or rationalized floating-point
// estimates (angles read off coordinates that are not multiples of 45 degrees).
enum class Exactness { Exact, Approximate };

// Consecutive sector angles around one vertex. Sector i lies between crease i
// and crease i+1; indices are cyclic, so the sector after the last is sector 0.
class AngleSequence {
 public:
  AngleSequence(std::vector<Rational> degrees, Exactness exactness = Exactness::Exact)
      : exactness_(exactness) {
    if (degrees.empty()) {
      throw PreconditionError("angle sequence needs at least one angle");
    }
    angles_.reserve(degrees.size());
    for (auto& d : degrees) {
      angles_.emplace_back(std::move(d));
    }
  }

  AngleSequence(std::initializer_list<Rational> degrees)
      : AngleSequence(std::vector<Rational>(degrees)) {}

  std::size_t size() const noexcept { return angles_.size(); }
  bool even() const noexcept { return angles_.size() % 2 == 0; }

  const Rational& operator[](std::size_t i) const { return angles_[i].degrees(); }

  // Cyclic access; accepts any integer index.
  const Rational& cyclic(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(angles_.size());
    return angles_[static_cast<std::size_t>(((i % n) + n) % n)].degrees();
  }

  std::span<const Angle> angles() const noexcept { return angles_; }

  std::vector<Rational> degrees() const {
    std::vector<Rational> out;
    out.reserve(angles_.size());
    for (const auto& a : angles_) {
      out.push_back(a.degrees());
    }
    return out;
  }

  Rational total() const {
    Rational sum = 0;
    for (const auto& a : angles_) {
      sum += a.degrees();
    }
    return sum;
  }

  SurfaceKind kind() const { return total() == 360 ? SurfaceKind::Flat : SurfaceKind::Cone; }

  Exactness exactness() const noexcept { return exactness_; }
  bool exact() const noexcept { return exactness_ == Exactness::Exact; }

  bool all_equal() const {
    return std::all_of(angles_.begin(), angles_.end(),
                       [&](const Angle& a) { return a == angles_.front(); });
  }

  // Sequence starting at sector `shift`.
  AngleSequence rotated(std::size_t shift) const {
    std::vector<Rational> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      out.push_back(cyclic(static_cast<std::ptrdiff_t>(i + shift)));
    }
    return AngleSequence(std::move(out), exactness_);
  }

  // The same vertex read clockwise.
  AngleSequence reversed() const {
    auto d = degrees();
    std::reverse(d.begin(), d.end());
    return AngleSequence(std::move(d), exactness_);
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ", ";
      out += flatfold::to_string(angles_[i].degrees());
    }
    return out + ")";
  }

  friend bool operator==(const AngleSequence& a, const AngleSequence& b) {
    return a.exactness_ == b.exactness_ && a.angles_ == b.angles_;
  }

 private:
  std::vector<Angle> angles_;
  Exactness exactness_;
};

// One label per crease; label i belongs to crease i.
class MVAssignment {
 public:
  MVAssignment() = default;
  explicit MVAssignment(std::vector<Label> labels) : labels_(std::move(labels)) {}

  // Bit i set means crease i is a mountain.
  static MVAssignment from_mask(std::size_t creases, unsigned long long mask) {
    std::vector<Label> labels(creases, Label::Valley);
    for (std::size_t i = 0; i < creases; ++i) {
      if ((mask >> i) & 1ULL) labels[i] = Label::Mountain;
    }
    return MVAssignment(std::move(labels));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](std::size_t i) const { return labels_[i]; }
  std::span<const Label> labels() const noexcept { return labels_; }

  long mountains() const {
    return static_cast<long>(std::count(labels_.begin(), labels_.end(), Label::Mountain));
  }
  long valleys() const { return static_cast<long>(labels_.size()) - mountains(); }
  long m_minus_v() const { return mountains() - valleys(); }

  MVAssignment rotated(std::size_t shift) const {
    std::vector<Label> out(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      out[i] = labels_[(i + shift) % labels_.size()];
    }
    return MVAssignment(std::move(out));
  }

  MVAssignment flipped() const {
    std::vector<Label> out(labels_);
    for (auto& l : out) l = opposite(l);
    return MVAssignment(std::move(out));
  }

  std::string to_string() const {
    std::string out;
    for (auto l : labels_) out.push_back(to_char(l));
    return out;
  }

  friend bool operator==(const MVAssignment&, const MVAssignment&) = default;

 private:
  std::vector<Label> labels_;
};

// One application of the equal-run reduction.
struct ReductionStep {
  std::size_t start;       // index of the first run sector in the sequence being reduced
  std::size_t run_length;  // k + 1 equal angles
  BigInt factor;           // binomial multiplier contributed by this step
  AngleSequence residual;  // sequence handed to the next level
};

struct CountResult {
  BigInt count;
  std::vector<ReductionStep> trace;
  BigInt base_value;  // closed-form count of the final all-equal sequence
  std::pair<BigInt, BigInt> bounds;

  BigInt trace_product() const {
    BigInt product = base_value;
    for (const auto& step : trace) product *= step.factor;
    return product;
  }
};

// Crease and vertex tallies over a whole pattern.
struct PatternTally {
  long mountains = 0;
  long valleys = 0;
  long interior_mountains = 0;
  long interior_valleys = 0;
  long up_vertices = 0;
  long down_vertices = 0;

  friend bool operator==(const PatternTally&, const PatternTally&) = default;
};

}  // namespace flatfold
