#include "odeframe/expr.hpp"

#include <cctype>
#include <sstream>

namespace odeframe {

ExprPtr Expr::make_constant(const Rational& q) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Constant;
  e->value = q;
  return e;
}

ExprPtr Expr::make_time() {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Time;
  return e;
}

ExprPtr Expr::make_coordinate(int i) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Coordinate;
  e->index = i;
  return e;
}

ExprPtr Expr::make_binary(Kind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->left = std::move(a);
  e->right = std::move(b);
  return e;
}

ExprPtr Expr::make_neg(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Neg;
  e->left = std::move(a);
  return e;
}

ExprPtr Expr::make_pow(ExprPtr a, long ex) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->left = std::move(a);
  e->exponent = ex;
  return e;
}

ExprPtr Expr::make_call(Kind k, ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->left = std::move(a);
  return e;
}

Jet Expr::expand(const std::vector<Rational>& point, int vars, int order) const {
  switch (kind) {
    case Kind::Constant:
      return Jet::constant(vars, order, value);
    case Kind::Time:
      return Jet::coordinate(vars, order, 0, point.at(0));
    case Kind::Coordinate:
      return Jet::coordinate(vars, order, index + 1, point.at(index + 1));
    case Kind::Add:
      return left->expand(point, vars, order) + right->expand(point, vars, order);
    case Kind::Sub:
      return left->expand(point, vars, order) - right->expand(point, vars, order);
    case Kind::Mul:
      return left->expand(point, vars, order) * right->expand(point, vars, order);
    case Kind::Div:
      return left->expand(point, vars, order) / right->expand(point, vars, order);
    case Kind::Neg:
      return -left->expand(point, vars, order);
    case Kind::Pow:
      return pow(left->expand(point, vars, order), exponent);
    case Kind::Exp:
      return exp_jet(left->expand(point, vars, order));
    case Kind::Log:
      return log_jet(left->expand(point, vars, order));
    case Kind::Sin:
      return sin_jet(left->expand(point, vars, order));
    case Kind::Cos:
      return cos_jet(left->expand(point, vars, order));
    case Kind::Sqrt:
      return sqrt_jet(left->expand(point, vars, order));
  }
  throw jet_error("unreachable expression kind");
}

Rational Expr::evaluate(const std::vector<Rational>& point) const {
  return expand(point, static_cast<int>(point.size()), 0).constant_term();
}

bool Expr::variable_under_function(int var) const {
  auto contains = [](const Expr& e, int v, auto&& self) -> bool {
    if (e.kind == Kind::Time) return v == -1;
    if (e.kind == Kind::Coordinate) return v == e.index;
    return (e.left && self(*e.left, v, self)) || (e.right && self(*e.right, v, self));
  };
  switch (kind) {
    case Kind::Exp:
    case Kind::Log:
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Sqrt:
      return contains(*left, var, contains);
    default:
      return (left && left->variable_under_function(var)) ||
             (right && right->variable_under_function(var));
  }
}

int Expr::max_coordinate() const {
  int m = (kind == Kind::Coordinate) ? index : -1;
  if (left) m = std::max(m, left->max_coordinate());
  if (right) m = std::max(m, right->max_coordinate());
  return m;
}

namespace {

// Precedence levels used by the printer (higher binds tighter).
constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecNeg = 3;
constexpr int kPrecPow = 4;

}  // namespace

std::string Expr::to_string() const { return to_string_prec(0); }

std::string Expr::to_string_prec(int parent_prec) const {
  std::ostringstream out;
  int prec = kPrecPow + 1;  // atoms by default
  switch (kind) {
    case Kind::Constant:
      if (value < 0 || value.get_den() != 1) prec = kPrecNeg;  // needs parens under tighter context
      out << odeframe::to_string(value);
      break;
    case Kind::Time:
      out << "t";
      break;
    case Kind::Coordinate:
      out << "x" << index;
      break;
    case Kind::Add:
      prec = kPrecAdd;
      out << left->to_string_prec(kPrecAdd) << " + " << right->to_string_prec(kPrecAdd);
      break;
    case Kind::Sub:
      prec = kPrecAdd;
      out << left->to_string_prec(kPrecAdd) << " - " << right->to_string_prec(kPrecAdd + 1);
      break;
    case Kind::Mul:
      prec = kPrecMul;
      out << left->to_string_prec(kPrecMul) << "*" << right->to_string_prec(kPrecMul);
      break;
    case Kind::Div:
      prec = kPrecMul;
      out << left->to_string_prec(kPrecMul) << "/" << right->to_string_prec(kPrecMul + 1);
      break;
    case Kind::Neg:
      prec = kPrecNeg;
      out << "-" << left->to_string_prec(kPrecNeg);
      break;
    case Kind::Pow:
      prec = kPrecPow;
      out << left->to_string_prec(kPrecPow + 1) << "^";
      if (exponent < 0)
        out << "(" << exponent << ")";
      else
        out << exponent;
      break;
    case Kind::Exp:
      out << "exp(" << left->to_string_prec(0) << ")";
      break;
    case Kind::Log:
      out << "log(" << left->to_string_prec(0) << ")";
      break;
    case Kind::Sin:
      out << "sin(" << left->to_string_prec(0) << ")";
      break;
    case Kind::Cos:
      out << "cos(" << left->to_string_prec(0) << ")";
      break;
    case Kind::Sqrt:
      out << "sqrt(" << left->to_string_prec(0) << ")";
      break;
  }
  if (prec < parent_prec) return "(" + out.str() + ")";
  return out.str();
}

namespace {

/// Hand-rolled recursive-descent parser. Precedence, loosest to tightest:
/// + - | * / | unary - | ^ with an integer exponent.
class Parser {
 public:
  Parser(const std::string& text, int k) : text_(text), k_(k) {}

  ExprPtr run() {
    ExprPtr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  ExprPtr parse_sum() {
    ExprPtr e = parse_product();
    for (;;) {
      if (eat('+'))
        e = Expr::make_binary(Expr::Kind::Add, e, parse_product());
      else if (eat('-'))
        e = Expr::make_binary(Expr::Kind::Sub, e, parse_product());
      else
        return e;
    }
  }

  ExprPtr parse_product() {
    ExprPtr e = parse_unary();
    for (;;) {
      if (eat('*'))
        e = Expr::make_binary(Expr::Kind::Mul, e, parse_unary());
      else if (eat('/'))
        e = Expr::make_binary(Expr::Kind::Div, e, parse_unary());
      else
        return e;
    }
  }

  ExprPtr parse_unary() {
    if (eat('-')) return Expr::make_neg(parse_unary());
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (!eat('^')) return base;
    return Expr::make_pow(base, parse_exponent());
  }

  long parse_exponent() {
    skip_ws();
    bool parens = eat('(');
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer exponent after '^'");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000) fail("exponent too large");
      ++pos_;
    }
    if (parens && !eat(')')) fail("expected ')' closing the exponent");
    return neg ? -v : v;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  ExprPtr parse_number() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    if (pos_ < text_.size() && text_[pos_] == '.')
      fail("decimal literals are not supported; use a rational like 3/10");
    auto q = parse_rational(digits);
    if (!q) fail("bad numeric literal '" + digits + "'");
    return Expr::make_constant(*q);
  }

  ExprPtr parse_name() {
    std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      name += text_[pos_++];
    if (name == "t") return Expr::make_time();
    if (name == "exp") return parse_call(Expr::Kind::Exp, name);
    if (name == "log") return parse_call(Expr::Kind::Log, name);
    if (name == "sin") return parse_call(Expr::Kind::Sin, name);
    if (name == "cos") return parse_call(Expr::Kind::Cos, name);
    if (name == "sqrt") return parse_call(Expr::Kind::Sqrt, name);
    if (name.size() >= 2 && name[0] == 'x') {
      bool digits_only = true;
      for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits_only = false;
      if (digits_only) {
        long idx = std::stol(name.substr(1));
        if (idx > k_) {
          pos_ = start;
          fail("variable index exceeds k: '" + name + "' with k = " + std::to_string(k_));
        }
        return Expr::make_coordinate(static_cast<int>(idx));
      }
    }
    pos_ = start;
    fail("unknown name '" + name + "'");
  }

  ExprPtr parse_call(Expr::Kind k, const std::string& name) {
    if (!eat('(')) fail("expected '(' after '" + name + "'");
    ExprPtr arg = parse_sum();
    if (!eat(')')) fail("expected ')' closing '" + name + "'");
    return Expr::make_call(k, arg);
  }

  const std::string& text_;
  int k_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& text, int k) { return Parser(text, k).run(); }

}  // namespace odeframe
