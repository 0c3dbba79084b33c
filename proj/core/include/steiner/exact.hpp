#pragma once

// Exact integer and rational arithmetic shared by every module. Nothing in the
// library compares bounds in floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace steiner {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// a + b, throwing OverflowError instead of wrapping.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

/// a * b, throwing OverflowError instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

std::string to_string(const BigInt& value);

/// Reduced fraction "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Fixed-point decimal rendering with `places` digits after the point,
/// rounded half away from zero.
std::string to_decimal(const Rational& value, int places);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace steiner
