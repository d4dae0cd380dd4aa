#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace monoclosure {

/// Exponents and counts. Arbitrary precision; small values stay inline.
using Integer = boost::multiprecision::cpp_int;

/// Exact rationals used by the LP layer.
using Rational = boost::multiprecision::cpp_rational;

inline std::optional<std::int64_t> to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return value.convert_to<std::int64_t>();
}

inline std::string to_string(const Integer& value) { return value.str(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& value) {
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

}  // namespace monoclosure
