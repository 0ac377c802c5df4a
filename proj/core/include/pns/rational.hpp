#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pns {

// Exact arithmetic throughout the core; no floating point touches any value
// that a check or a report depends on. Expression templates are off so the
// types behave as plain values in lambdas and initializer lists.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rat =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

// Tag for the point at infinity of [0, inf].
struct infinity_t {};
inline constexpr infinity_t infinity{};

// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument
// on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rat_text(const Rat& r);

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

inline namespace rat_literals {
// q(3, 4) == 3/4; avoids spelling Rat(Int(..), Int(..)) in tests and tables.
inline Rat q(long num, long den = 1) { return Rat(num, den); }
}  // namespace rat_literals

}  // namespace pns
