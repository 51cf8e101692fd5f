#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace zf {

// Exact rationals are GMP mpq values; mpq keeps gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact square root of a non-negative integer, if it is a perfect square.
std::optional<Integer> integer_sqrt_exact(const Integer& n);

/// Exact square root within the rationals, if one exists.
std::optional<Rational> rational_sqrt_exact(const Rational& r);

/// Text form "p/q" (plain "p" when q = 1).
std::string to_string(const Rational& r);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

}  // namespace zf
