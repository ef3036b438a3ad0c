#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclo {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Expression templates are disabled so `auto` is safe.
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(num) / Rational(den);
}

Integer numerator_of(const Rational& r);
Integer denominator_of(const Rational& r);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Fixed-point rendering with `digits` fractional digits, rounded half away
/// from zero. Display only.
std::string to_decimal(const Rational& r, int digits = 6);

/// Numerator and denominator as machine integers, if both fit.
std::optional<std::pair<std::int64_t, std::int64_t>> to_int64_pair(
    const Rational& r);

double to_double(const Rational& r);

}  // namespace cyclo
