#pragma once

#include "flatfold/core.hpp"

#include <random>
#include <vector>

namespace flatfold::corpus {

// Random exact angle sequence of the given even degree whose alternating sum
// is zero. Angles are drawn from a coarse grid so equal-angle runs are common;
// the alternating-sum defect is then added to one angle of the lighter parity
// class. With `flat` the result is rescaled to total exactly 360.
template <class Rng>
AngleSequence random_kawasaki_sequence(Rng& rng, std::size_t degree, bool flat) {
  std::uniform_int_distribution<int> tens(1, 6);
  std::uniform_int_distribution<int> coin(0, 9);
  std::uniform_int_distribution<int> denom(2, 3);
  std::vector<Rational> angles;
  for (std::size_t i = 0; i < degree; ++i) {
    Rational a = 10 * tens(rng);
    if (coin(rng) == 0) a = Rational(10 * tens(rng) + 1, denom(rng));
    angles.push_back(a);
  }
  Rational defect = 0;
  for (std::size_t i = 0; i < degree; ++i) defect += i % 2 == 0 ? angles[i] : Rational(-angles[i]);
  if (defect != 0) {
    std::uniform_int_distribution<std::size_t> pick(0, degree / 2 - 1);
    const std::size_t slot = 2 * pick(rng) + (defect > 0 ? 1 : 0);
    angles[slot] += defect > 0 ? defect : Rational(-defect);
  }
  if (flat) {
    Rational total = 0;
    for (const auto& a : angles) total += a;
    for (auto& a : angles) a = a * 360 / total;
  }
  return AngleSequence(std::move(angles));
}

// Random exact sequence of the given degree with no alternating-sum repair.
template <class Rng>
AngleSequence random_sequence(Rng& rng, std::size_t degree, bool flat) {
  std::uniform_int_distribution<int> tens(1, 9);
  std::vector<Rational> angles;
  for (std::size_t i = 0; i < degree; ++i) angles.push_back(10 * tens(rng));
  if (flat) {
    Rational total = 0;
    for (const auto& a : angles) total += a;
    for (auto& a : angles) a = a * 360 / total;
  }
  return AngleSequence(std::move(angles));
}

}  // namespace flatfold::corpus
