#ifndef TANGENTLAB_RATIONAL_HPP
#define TANGENTLAB_RATIONAL_HPP

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tangentlab {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Parses "p/q", integers, and decimal literals ("0.55", "-1.5e-3") exactly.
/// Throws Error(Validation) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational rational_from_double(double value);

/// Rational from the shortest decimal representation of `value`, so that a
/// JSON number 0.8 becomes 4/5 rather than its binary64 neighbour.
Rational rational_from_decimal_double(double value);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& value);

/// floor(value) as a 64-bit integer; value must fit.
long long floor_to_int(const Rational& value);

}  // namespace tangentlab

#endif
