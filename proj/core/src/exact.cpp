#include "steiner/exact.hpp"

#include "steiner/errors.hpp"

#include <sstream>

namespace steiner {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step.
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("64-bit accumulator overflow in addition");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("64-bit accumulator overflow in multiplication");
  return out;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& value, int places) {
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const BigInt scaled = (2 * num * scale + den) / (2 * den);
  const BigInt whole = scaled / scale;
  const BigInt frac = scaled % scale;

  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (places > 0) {
    std::string digits = frac.str();
    out += '.';
    out.append(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("not a rational number: '" + text + "'");
  }
}

}  // namespace steiner
