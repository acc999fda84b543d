#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "odeframe/jet.hpp"
#include "odeframe/rational.hpp"

namespace odeframe {

/// Raised by the parser and the symbolic evaluator with a position-tagged
/// message describing what went wrong in the input text.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Symbolic right-hand sides: rational constants, the independent variable t,
/// derivative coordinates x0..xk, arithmetic, integer powers, and the
/// elementary functions whose series keep rational coefficients.
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  enum class Kind { Constant, Time, Coordinate, Add, Sub, Mul, Div, Neg, Pow, Exp, Log, Sin, Cos, Sqrt };

  Kind kind;
  Rational value;       // Constant
  int index = 0;        // Coordinate: which x_i
  long exponent = 0;    // Pow
  ExprPtr left, right;  // children (unary ops use left only)

  static ExprPtr make_constant(const Rational& q);
  static ExprPtr make_time();
  static ExprPtr make_coordinate(int i);
  static ExprPtr make_binary(Kind k, ExprPtr a, ExprPtr b);
  static ExprPtr make_neg(ExprPtr a);
  static ExprPtr make_pow(ExprPtr a, long e);
  static ExprPtr make_call(Kind k, ExprPtr a);

  /// Evaluates at a point: t first, then x0..xk.
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Taylor-expands around a point into a jet in `vars` variables where the
  /// first 2 + max_index coordinates are t, x0..xk (extra variables, if any,
  /// never appear). Throws jet_error on domain violations (e.g. log of a
  /// jet whose value at the point is not 1).
  Jet expand(const std::vector<Rational>& point, int vars, int order) const;

  /// True when the subtree contains exp/log/sin/cos/sqrt applied to a
  /// non-constant argument involving the given variable (t = -1, else x_i).
  bool variable_under_function(int var) const;

  /// Largest coordinate index that occurs, or -1 if none.
  int max_coordinate() const;

  std::string to_string() const;

 private:
  std::string to_string_prec(int parent_prec) const;
};

/// Parses an expression over t, x0..xk. Rejects coordinates above `k` with a
/// "variable index exceeds k" error. Messages carry a character position.
ExprPtr parse_expr(const std::string& text, int k);

}  // namespace odeframe
