#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace flatfold {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

// "p" for integers, "p/q" in lowest terms otherwise.
inline std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

// Parses "12", "-3", "22.5", "7/3". Decimals convert exactly (22.5 -> 45/2).
// Returns std::nullopt on malformed text; the caller decides how to report it.
inline std::optional<Rational> try_parse_rational(std::string_view text) {
  if (text.empty()) {
    return std::nullopt;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  auto read_digits = [&](std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return text.substr(start, pos - start);
  };

  const std::string_view whole = read_digits(i);
  if (whole.empty()) {
    return std::nullopt;
  }
  Rational result{BigInt{std::string(whole)}};

  if (i < text.size() && text[i] == '.') {
    ++i;
    const std::string_view frac = read_digits(i);
    if (frac.empty()) {
      return std::nullopt;
    }
    BigInt scale = 1;
    for (std::size_t d = 0; d < frac.size(); ++d) {
      scale *= 10;
    }
    result += Rational(BigInt{std::string(frac)}, scale);
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    const std::string_view den = read_digits(i);
    if (den.empty()) {
      return std::nullopt;
    }
    BigInt denominator{std::string(den)};
    if (denominator == 0) {
      return std::nullopt;
    }
    result = Rational(BigInt{std::string(whole)}, denominator);
  }
  if (i != text.size()) {
    return std::nullopt;
  }
  return negative ? Rational(-result) : result;
}

// Exact binomial coefficient; zero when k > n.
inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigInt pow2(unsigned exponent) { return BigInt{1} << exponent; }

}  // namespace flatfold
