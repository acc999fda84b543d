#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "odeframe/monomial.hpp"
#include "odeframe/rational.hpp"

namespace odeframe {

/// Raised when an operation cannot deliver its result at a well-defined
/// validity order (e.g. differentiating an order-0 jet).
struct insufficient_order_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised on structural misuse: variable-count mismatch, inverting a jet
/// with zero constant term, querying beyond the validity order.
struct jet_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Truncated multivariate power series at a point with exact rational
/// coefficients and a tracked validity order.
///
/// Invariants: no stored coefficient is zero; no stored monomial exceeds the
/// validity order; arithmetic results carry the minimum validity order of
/// the operands, and lossy operations (partial) decrement it.
class Jet {
 public:
  Jet() = default;
  Jet(int vars, int order) : vars_(vars), order_(order) {
    if (vars < 0 || vars > Monomial::kMaxVars) throw jet_error("jet variable count out of range");
    if (order < 0 || order > Monomial::kMaxDegree) throw jet_error("jet order out of range");
  }

  static Jet constant(int vars, int order, const Rational& value) {
    Jet j(vars, order);
    if (!odeframe::is_zero(value)) j.terms_.emplace(Monomial::one(), value);
    return j;
  }

  /// Taylor jet of the coordinate function `var`: point value + displacement.
  static Jet coordinate(int vars, int order, int var, const Rational& point_value) {
    Jet j = constant(vars, order, point_value);
    if (var < 0 || var >= vars) throw jet_error("coordinate variable out of range");
    if (order >= 1) j.terms_.emplace(Monomial::unit(var), Rational(1));
    return j;
  }

  int vars() const { return vars_; }
  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  /// Coefficient lookup. Querying a monomial of total degree beyond the
  /// validity order is an error, never silently zero.
  const Rational& coeff(const Monomial& m) const;
  Rational constant_term() const;

  void set_coeff(const Monomial& m, const Rational& value);

  /// Truncation to a lower validity order. Raising the order is impossible:
  /// the discarded coefficients are unknown, not zero.
  Jet truncated(int new_order) const;

  /// Reinterprets the jet in a chart with more variables (appended at the
  /// end). Monomial encodings are unchanged, so this is free.
  Jet widened(int new_vars) const;

  Jet operator-() const;
  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  Jet& operator+=(const Jet& b) { return *this = *this + b; }
  Jet& operator-=(const Jet& b) { return *this = *this - b; }
  Jet& operator*=(const Jet& b) { return *this = *this * b; }

  friend Jet operator*(const Rational& c, const Jet& a);
  friend Jet operator*(const Jet& a, const Rational& c) { return c * a; }
  Jet scaled(const Rational& c) const { return c * *this; }

  friend bool operator==(const Jet& a, const Jet& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// Formal partial derivative; validity order drops by one.
  Jet partial(int var) const;

  /// True when the jets agree coefficient-by-coefficient up to the smaller
  /// of the two validity orders.
  friend bool agree_to_common_order(const Jet& a, const Jet& b);

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  static void check_same_shape(const Jet& a, const Jet& b);

  int vars_ = 0;
  int order_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// Multiplicative inverse of a jet with nonzero constant term.
Jet inverse(const Jet& a);

/// Integer power; negative exponents go through inverse().
Jet pow(const Jet& a, long e);

// Series composition for the elementary functions. Domain restrictions keep
// every constant term rational: exp/sin/cos need constant term 0, log needs
// constant term 1, sqrt needs a perfect-square constant term.
Jet exp_jet(const Jet& a);
Jet log_jet(const Jet& a);
Jet sin_jet(const Jet& a);
Jet cos_jet(const Jet& a);
Jet sqrt_jet(const Jet& a);

}  // namespace odeframe
