#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thoma {

/// Exact unbounded rational number.
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p/q", "p", with an optional leading sign. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Comma-separated rationals; the empty string yields an empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace thoma
