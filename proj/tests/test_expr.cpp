#include "doctest.h"

#include "odeframe/expr.hpp"

using namespace odeframe;

TEST_CASE("expression parsing and evaluation") {
  auto e = parse_expr("x0^2 + 3/2*x1 - t", 3);
  std::vector<Rational> pt = {Rational(2), Rational(3), Rational(4), Rational(0), Rational(0)};
  // 9 + 6 - 2
  CHECK(e->evaluate(pt) == Rational(13));

  auto f = parse_expr("(x1 + x2)*(x1 - x2)", 4);
  std::vector<Rational> pt2 = {Rational(0), Rational(0), Rational(5), Rational(3),
                               Rational(0), Rational(0)};
  CHECK(f->evaluate(pt2) == Rational(16));

  auto g = parse_expr("-x0/4", 3);
  std::vector<Rational> pt3 = {Rational(0), Rational(2), Rational(0), Rational(0), Rational(0)};
  CHECK(g->evaluate(pt3) == rat(-1, 2));
}

TEST_CASE("parser rejects malformed input with positioned messages") {
  CHECK_THROWS_AS((void)parse_expr("x0 +", 3), parse_error);
  CHECK_THROWS_AS((void)parse_expr("x9", 3), parse_error);     // index above k
  CHECK_THROWS_AS((void)parse_expr("y0", 3), parse_error);     // unknown name
  CHECK_THROWS_AS((void)parse_expr("sin()", 3), parse_error);
  CHECK_THROWS_AS((void)parse_expr("(x0", 3), parse_error);
  CHECK_THROWS_AS((void)parse_expr("x0^x1", 3), parse_error);  // non-integer exponent
  CHECK_THROWS_AS((void)parse_expr("", 3), parse_error);
}

TEST_CASE("expansion matches hand-computed Taylor coefficients") {
  // F = x0^2 at x0 = 3: (3 + dx)^2 = 9 + 6 dx + dx^2
  auto e = parse_expr("x0^2", 3);
  std::vector<Rational> pt = {Rational(0), Rational(3), Rational(0), Rational(0), Rational(0)};
  Jet j = e->expand(pt, 5, 4);
  CHECK(j.constant_term() == Rational(9));
  CHECK(j.coeff(Monomial::unit(1)) == Rational(6));
  std::vector<int> sq = {0, 2, 0, 0, 0};
  CHECK(j.coeff(Monomial::from_exponents(sq)) == Rational(1));

  // 1/(1+x0) at x0 = 0: alternating geometric series
  auto r = parse_expr("1/(1 + x0)", 2);
  std::vector<Rational> origin = {Rational(0), Rational(0), Rational(0), Rational(0)};
  Jet jr = r->expand(origin, 4, 5);
  for (int d = 0; d <= 5; ++d) {
    std::vector<int> exps = {0, d, 0, 0};
    CHECK(jr.coeff(Monomial::from_exponents(exps)) == Rational(d % 2 == 0 ? 1 : -1));
  }

  // sin(x1) at x1 = 0: x - x^3/6 + x^5/120
  auto s = parse_expr("sin(x1)", 2);
  Jet js = s->expand(origin, 4, 5);
  CHECK(js.coeff(Monomial::unit(2)) == Rational(1));
  std::vector<int> cube = {0, 0, 3, 0};
  CHECK(js.coeff(Monomial::from_exponents(cube)) == rat(-1, 6));
  std::vector<int> fifth = {0, 0, 5, 0};
  CHECK(js.coeff(Monomial::from_exponents(fifth)) == rat(1, 120));
}

TEST_CASE("series domain restrictions are enforced at expansion time") {
  std::vector<Rational> pt = {Rational(0), Rational(2), Rational(0), Rational(0), Rational(0)};
  // log needs value 1 at the point, sqrt needs a perfect square, exp needs 0
  CHECK_THROWS_AS((void)parse_expr("log(x0)", 3)->expand(pt, 5, 4), jet_error);
  CHECK_THROWS_AS((void)parse_expr("sqrt(x0)", 3)->expand(pt, 5, 4), jet_error);
  CHECK_THROWS_AS((void)parse_expr("exp(x0)", 3)->expand(pt, 5, 4), jet_error);

  std::vector<Rational> good = {Rational(0), Rational(1), Rational(4), Rational(0), Rational(0)};
  CHECK_NOTHROW((void)parse_expr("log(x0)", 3)->expand(good, 5, 4));
  CHECK_NOTHROW((void)parse_expr("sqrt(x1)", 3)->expand(good, 5, 4));

  // division by a function vanishing at the point
  std::vector<Rational> zero_x0 = {Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)};
  CHECK_THROWS_AS((void)parse_expr("1/x0", 3)->expand(zero_x0, 5, 4), jet_error);
}

TEST_CASE("function-argument tracking identifies restricted coordinates") {
  auto e = parse_expr("sin(x1) + x0^2", 3);
  CHECK(e->variable_under_function(1));
  CHECK(!e->variable_under_function(0));
  CHECK(!e->variable_under_function(-1));

  auto f = parse_expr("exp(t*x2)", 3);
  CHECK(f->variable_under_function(-1));
  CHECK(f->variable_under_function(2));

  CHECK(parse_expr("x1*x3", 4)->max_coordinate() == 3);
  CHECK(parse_expr("t + 1", 4)->max_coordinate() == -1);
}

TEST_CASE("printing round-trips through the parser") {
  // Expand at a point where every series argument vanishes, so the
  // comparison covers the elementary functions too.
  std::vector<Rational> pt = {Rational(0), rat(1, 7), Rational(0), rat(3, 7), rat(4, 7),
                              rat(5, 7)};
  for (const char* text : {"x0^2 + x1*x2", "sin(x1) - cos(t)", "1/2*x3 - 7/3",
                           "(t + x0)^3/(1 + x1^2)", "exp(2*x1) + sqrt(4 + t)"}) {
    auto e = parse_expr(text, 4);
    auto round = parse_expr(e->to_string(), 4);
    CHECK(e->expand(pt, 6, 5) == round->expand(pt, 6, 5));
  }
}
