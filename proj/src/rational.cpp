#include "odeframe/rational.hpp"

namespace odeframe {

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  // mpq accepts "p/q" directly but also tolerates whitespace and leading '+';
  // restrict to the canonical grammar: -?digits(/digits)?
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  bool seen_slash = false;
  for (; i < text.size(); ++i) {
    if (text[i] == '/') {
      if (seen_slash || i + 1 == text.size()) return std::nullopt;
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  }
  Rational q;
  if (q.set_str(text, 10) != 0) return std::nullopt;
  if (seen_slash && sgn(mpq_class(q.get_den())) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

Rational pow_rational(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (sgn(q) == 0 && e < 0) throw std::domain_error("zero raised to negative power");
  Rational base = e > 0 ? q : Rational(1) / q;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::optional<Rational> sqrt_rational(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class rnum, rden;
  if (mpz_root(rnum.get_mpz_t(), num.get_mpz_t(), 2) == 0) return std::nullopt;
  if (mpz_root(rden.get_mpz_t(), den.get_mpz_t(), 2) == 0) return std::nullopt;
  Rational r(rnum, rden);
  r.canonicalize();
  return r;
}

}  // namespace odeframe
