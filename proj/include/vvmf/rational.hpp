#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace vvmf {

/// Exact rational scalar. Expression templates are disabled so the type
/// composes with Eigen's dense containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline bool is_integral(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

inline Integer num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer den(const Rational& x) { return boost::multiprecision::denominator(x); }

/// Largest integer <= x.
Integer floor(const Rational& x);

/// base^exp for any integer exponent; base must be non-zero when exp < 0.
Rational pow(const Rational& base, std::int64_t exp);

/// Canonical "a/b" text, "a" for integers.
std::string to_string(const Rational& x);

/// Accepts "a", "a/b", with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Converts an integral rational that fits in 64 bits; throws otherwise.
std::int64_t to_int64(const Rational& x);

}  // namespace vvmf
