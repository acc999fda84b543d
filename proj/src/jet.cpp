#include "odeframe/jet.hpp"

#include <algorithm>
#include <sstream>

namespace odeframe {

namespace {

const Rational kZero(0);

}  // namespace

void Jet::check_same_shape(const Jet& a, const Jet& b) {
  if (a.vars_ != b.vars_) throw jet_error("jet variable count mismatch");
}

const Rational& Jet::coeff(const Monomial& m) const {
  if (m.degree() > order_) throw jet_error("coefficient query beyond jet validity order");
  auto it = terms_.find(m);
  return it == terms_.end() ? kZero : it->second;
}

Rational Jet::constant_term() const {
  auto it = terms_.find(Monomial::one());
  return it == terms_.end() ? Rational(0) : it->second;
}

void Jet::set_coeff(const Monomial& m, const Rational& value) {
  if (m.degree() > order_) throw jet_error("coefficient set beyond jet validity order");
  if (odeframe::is_zero(value))
    terms_.erase(m);
  else
    terms_[m] = value;
}

Jet Jet::truncated(int new_order) const {
  if (new_order > order_) throw insufficient_order_error("insufficient jet order: cannot extend validity from order " + std::to_string(order_) + " to " + std::to_string(new_order));
  if (new_order < 0) throw insufficient_order_error("insufficient jet order: validity order exhausted");
  Jet r(vars_, new_order);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > new_order) break;  // graded order: all later terms are higher degree
    r.terms_.emplace(m, c);
  }
  return r;
}

Jet Jet::widened(int new_vars) const {
  if (new_vars < vars_) throw jet_error("jet widening cannot drop variables");
  Jet r = *this;
  r.vars_ = new_vars;
  return r;
}

Jet Jet::operator-() const {
  Jet r(vars_, order_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet::check_same_shape(a, b);
  int order = std::min(a.order_, b.order_);
  Jet r(a.vars_, order);
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      if (ia->first.degree() <= order) r.terms_.emplace(ia->first, ia->second);
      ++ia;
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      if (ib->first.degree() <= order) r.terms_.emplace(ib->first, ib->second);
      ++ib;
    } else {
      Rational s = ia->second + ib->second;
      if (!is_zero(s) && ia->first.degree() <= order) r.terms_.emplace(ia->first, s);
      ++ia;
      ++ib;
    }
  }
  return r;
}

Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

Jet operator*(const Jet& a, const Jet& b) {
  Jet::check_same_shape(a, b);
  int order = std::min(a.order_, b.order_);
  Jet r(a.vars_, order);
  for (const auto& [ma, ca] : a.terms_) {
    int da = ma.degree();
    if (da > order) break;
    for (const auto& [mb, cb] : b.terms_) {
      if (da + mb.degree() > order) break;  // graded order: remaining b-terms only larger
      Monomial m = ma * mb;
      Rational& slot = r.terms_[m];
      slot += ca * cb;
      if (is_zero(slot)) r.terms_.erase(m);
    }
  }
  return r;
}

Jet operator*(const Rational& c, const Jet& a) {
  Jet r(a.vars_, a.order_);
  if (is_zero(c)) return r;
  for (const auto& [m, q] : a.terms_) r.terms_.emplace(m, c * q);
  return r;
}

Jet inverse(const Jet& a) {
  Rational c0 = a.constant_term();
  if (is_zero(c0)) throw jet_error("jet not invertible at point");
  // Schoolbook inversion degree by degree: with a = c0 + h (h of positive
  // degree), solve a * r = 1 for r's coefficients in increasing degree.
  Jet r(a.vars(), a.order());
  r.set_coeff(Monomial::one(), 1 / c0);
  // residual = a*r - 1, maintained incrementally per degree.
  for (int d = 1; d <= a.order(); ++d) {
    Jet prod = a * r;
    for (const auto& [m, c] : prod.terms()) {
      if (m.degree() != d) continue;
      r.set_coeff(m, -c / c0);
    }
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) { return a * inverse(b); }

Jet pow(const Jet& a, long e) {
  if (e < 0) return pow(inverse(a), -e);
  Jet r = Jet::constant(a.vars(), a.order(), Rational(1));
  Jet base = a;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    base = (e > 0) ? base * base : base;
  }
  return r;
}

Jet Jet::partial(int var) const {
  if (var < 0 || var >= vars_) throw jet_error("partial derivative variable out of range");
  if (order_ == 0) throw insufficient_order_error("insufficient jet order: differentiating an order-0 jet");
  Jet r(vars_, order_ - 1);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var);
    if (e == 0) continue;
    r.terms_.emplace(m.divided_once(var), Rational(e) * c);
  }
  return r;
}

bool agree_to_common_order(const Jet& a, const Jet& b) {
  if (a.vars_ != b.vars_) return false;
  int order = std::min(a.order_, b.order_);
  return a.truncated(order).terms_ == b.truncated(order).terms_;
}

std::string Jet::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = odeframe::to_string(c);
    if (first) {
      first = false;
    } else if (cs[0] == '-') {
      out << " - ";
      cs = cs.substr(1);
    } else {
      out << " + ";
    }
    if (m.degree() == 0) {
      out << cs;
    } else if (cs == "1") {
      out << odeframe::to_string(m, names);
    } else if (cs == "-1") {
      out << "-" << odeframe::to_string(m, names);
    } else {
      out << cs << "*" << odeframe::to_string(m, names);
    }
  }
  return out.str();
}

namespace {

/// Composes a univariate Maclaurin series (given by its coefficient stream)
/// with a jet whose constant term is zero: sum_{n} coeffs(n) * h^n.
Jet compose_series(const Jet& h, const std::vector<Rational>& coeffs) {
  Jet r = Jet::constant(h.vars(), h.order(), coeffs.empty() ? Rational(0) : coeffs[0]);
  Jet hpow = Jet::constant(h.vars(), h.order(), Rational(1));
  for (std::size_t n = 1; n < coeffs.size(); ++n) {
    hpow = hpow * h;
    if (hpow.is_zero()) break;
    r = r + coeffs[n] * hpow;
  }
  return r;
}

Jet require_zero_constant(const Jet& a, const char* fn) {
  if (!is_zero(a.constant_term()))
    throw jet_error(std::string(fn) + " requires argument with zero constant term (rational-coefficient arithmetic)");
  return a;
}

}  // namespace

Jet exp_jet(const Jet& a) {
  Jet h = require_zero_constant(a, "exp");
  std::vector<Rational> c(a.order() + 1);
  Rational fact(1);
  for (int n = 0; n <= a.order(); ++n) {
    if (n > 0) fact *= Rational(n);
    c[n] = 1 / fact;
  }
  return compose_series(h, c);
}

Jet log_jet(const Jet& a) {
  if (a.constant_term() != Rational(1))
    throw jet_error("log requires argument with constant term 1 (rational-coefficient arithmetic)");
  Jet h = a - Jet::constant(a.vars(), a.order(), Rational(1));
  std::vector<Rational> c(a.order() + 1, Rational(0));
  for (int n = 1; n <= a.order(); ++n) c[n] = Rational((n % 2) ? 1 : -1) / Rational(n);
  return compose_series(h, c);
}

Jet sin_jet(const Jet& a) {
  Jet h = require_zero_constant(a, "sin");
  std::vector<Rational> c(a.order() + 1, Rational(0));
  Rational fact(1);
  for (int n = 1; n <= a.order(); ++n) {
    fact *= Rational(n);
    if (n % 2 == 1) c[n] = Rational((n % 4 == 1) ? 1 : -1) / fact;
  }
  return compose_series(h, c);
}

Jet cos_jet(const Jet& a) {
  Jet h = require_zero_constant(a, "cos");
  std::vector<Rational> c(a.order() + 1, Rational(0));
  c[0] = Rational(1);
  Rational fact(1);
  for (int n = 1; n <= a.order(); ++n) {
    fact *= Rational(n);
    if (n % 2 == 0) c[n] = Rational((n % 4 == 0) ? 1 : -1) / fact;
  }
  return compose_series(h, c);
}

Jet sqrt_jet(const Jet& a) {
  Rational c0 = a.constant_term();
  auto root = sqrt_rational(c0);
  if (!root || is_zero(c0))
    throw jet_error("sqrt requires a positive perfect-square constant term (rational-coefficient arithmetic)");
  // sqrt(c0 + h) = sqrt(c0) * sqrt(1 + h/c0); binomial series with exponent 1/2.
  Jet h = (a - Jet::constant(a.vars(), a.order(), c0)) * Jet::constant(a.vars(), a.order(), 1 / c0);
  std::vector<Rational> c(a.order() + 1);
  c[0] = Rational(1);
  // c[n] = binom(1/2, n) = c[n-1] * (1/2 - (n-1)) / n
  for (int n = 1; n <= a.order(); ++n) c[n] = c[n - 1] * (Rational(1, 2) - Rational(n - 1)) / Rational(n);
  return *root * compose_series(h, c);
}

}  // namespace odeframe
