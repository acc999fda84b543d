#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace odeframe {

/// Exact rational scalar. All geometry in this library is computed over Q;
/// there is no floating-point fallback.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Parses "p", "-p" or "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical "p" or "p/q" form, used everywhere a rational is printed.
std::string to_string(const Rational& q);

/// q^e for integer e (e < 0 requires q != 0).
Rational pow_rational(const Rational& q, long e);

/// Exact rational square root; nullopt when q is not a perfect square in Q.
std::optional<Rational> sqrt_rational(const Rational& q);

}  // namespace odeframe
