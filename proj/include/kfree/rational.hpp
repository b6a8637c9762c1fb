#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "kfree/error.hpp"

namespace kfree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt to_bigint(unsigned __int128 x) {
  BigInt out = static_cast<std::uint64_t>(x >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(x);
  return out;
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

inline BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

inline BigInt power(std::int64_t base, int exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

/// Base-10 integer with optional sign. The Boost string constructor would
/// read a leading 0 as octal and "0x" as hex, so digits are checked here.
inline BigInt parse_decimal_integer(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  if (i == text.size()) throw PreconditionError("missing digits in '" + text + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw PreconditionError("bad digit in '" + text + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

/// Parses "p/q", an integer, or a decimal such as "0.125" or "3.125e-05"
/// exactly.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const BigInt den = parse_decimal_integer(text.substr(slash + 1));
      if (den == 0) throw PreconditionError("zero denominator in '" + text + "'");
      return Rational(parse_decimal_integer(text.substr(0, slash)), den);
    }
    std::string mantissa = text;
    int exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
      mantissa = text.substr(0, e);
      std::size_t used = 0;
      const std::string tail = text.substr(e + 1);
      exponent = std::stoi(tail, &used);
      if (used != tail.size() || exponent < -4096 || exponent > 4096) throw PreconditionError("bad exponent");
    }
    Rational value;
    const auto dot = mantissa.find('.');
    if (dot == std::string::npos) {
      value = Rational(parse_decimal_integer(mantissa));
    } else {
      const std::string digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
      value = Rational(parse_decimal_integer(digits), power(10, static_cast<int>(mantissa.size() - dot - 1)));
    }
    if (exponent >= 0) return value * Rational(power(10, exponent));
    return value / Rational(power(10, -exponent));
  } catch (const std::logic_error&) {
    throw PreconditionError("cannot parse rational '" + text + "'");
  } catch (const std::runtime_error&) {
    throw PreconditionError("cannot parse rational '" + text + "'");
  }
}

inline std::string to_string(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

struct RationalInterval {
  Rational lower;
  Rational upper;
};

/// Rational bracket of e^x for an integer x >= 0 with
/// (upper - lower) / lower below rel_tol. The lower end is a Taylor partial
/// sum; the upper end adds the geometric tail bound
///   sum_{k > N} x^k / k! <= x^{N+1} / (N+1)! * 1 / (1 - x / (N+2)).
inline RationalInterval exp_bounds(int x, const Rational& rel_tol = Rational(1, BigInt("1000000000000"))) {
  if (x < 0) throw PreconditionError("exp_bounds: exponent must be nonnegative");
  Rational sum = 1;
  Rational term = 1;
  for (int k = 1;; ++k) {
    term *= Rational(x, k);
    sum += term;
    const int next = k + 1;
    if (next + 1 <= x) continue;
    const Rational tail = term * Rational(x, next) / (1 - Rational(x, next + 1));
    if (tail < rel_tol * sum) return {sum, sum + tail};
  }
}

}  // namespace kfree
