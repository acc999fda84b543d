#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "odeframe/jet.hpp"

using namespace odeframe;

namespace {

// Deterministic random jets: a handful of monomials of bounded degree with
// small nonzero rational coefficients.
struct JetGen {
  std::mt19937_64 rng;
  int vars;
  int order;

  JetGen(std::uint64_t seed, int vars, int order) : rng(seed), vars(vars), order(order) {}

  Rational coefficient() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    int n = num(rng);
    if (n == 0) n = 1;
    return rat(n, den(rng));
  }

  Monomial monomial() {
    std::uniform_int_distribution<int> deg(0, order);
    std::uniform_int_distribution<int> var(0, vars - 1);
    int d = deg(rng);
    std::vector<int> exps(vars, 0);
    for (int i = 0; i < d; ++i) exps[var(rng)]++;
    return Monomial::from_exponents(exps);
  }

  Jet operator()(bool unit_constant = false) {
    Jet j(vars, order);
    if (unit_constant) j.set_coeff(Monomial::one(), Rational(1));
    std::uniform_int_distribution<int> nterms(3, 9);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
      Monomial m = monomial();
      if (unit_constant && m == Monomial::one()) continue;
      j.set_coeff(m, coefficient());
    }
    return j;
  }
};

}  // namespace

TEST_CASE("ring axioms hold exactly on randomized jets") {
  JetGen gen(20240901, 5, 7);
  for (int it = 0; it < 200; ++it) {
    Jet a = gen(), b = gen(), c = gen();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + (-a) == a - a);
    Jet one = Jet::constant(a.vars(), a.order(), Rational(1));
    CHECK(a * one == a);
    Jet zero(a.vars(), a.order());
    CHECK(a + zero == a);
    CHECK((a * zero).is_zero());
  }
}

TEST_CASE("product rule for partial derivatives") {
  JetGen gen(77001, 4, 6);
  for (int it = 0; it < 200; ++it) {
    Jet a = gen(), b = gen();
    int v = it % 4;
    CHECK((a * b).partial(v) == a.partial(v) * b + a * b.partial(v));
  }
}

TEST_CASE("mixed partials commute") {
  JetGen gen(5150, 5, 7);
  for (int it = 0; it < 200; ++it) {
    Jet a = gen();
    int i = it % 5, j = (it + 2) % 5;
    CHECK(a.partial(i).partial(j) == a.partial(j).partial(i));
  }
}

TEST_CASE("inverse multiplies back to one") {
  JetGen gen(31337, 4, 8);
  for (int it = 0; it < 200; ++it) {
    Jet a = gen(/*unit_constant=*/true);
    Jet prod = inverse(a) * a;
    CHECK(prod == Jet::constant(a.vars(), a.order(), Rational(1)));
  }
}

TEST_CASE("division and integer powers agree with repeated multiplication") {
  JetGen gen(424242, 3, 6);
  for (int it = 0; it < 50; ++it) {
    Jet a = gen(true), b = gen(true);
    CHECK((a / b) * b == a);
    CHECK(pow(a, 3) == a * a * a);
    CHECK(pow(a, -2) * a * a == Jet::constant(a.vars(), a.order(), Rational(1)));
    CHECK(pow(a, 0) == Jet::constant(a.vars(), a.order(), Rational(1)));
  }
}

TEST_CASE("validity order tracking") {
  Jet a(3, 5);
  a.set_coeff(Monomial::unit(0), rat(1, 2));
  Jet b(3, 3);
  b.set_coeff(Monomial::unit(1), Rational(2));

  SUBCASE("arithmetic carries the minimum order of the operands") {
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
  }
  SUBCASE("partial derivatives decrement the order") {
    CHECK(a.partial(0).order() == 4);
  }
  SUBCASE("coefficients beyond the validity order are unknown, not zero") {
    std::vector<int> exps = {0, 4, 0};
    CHECK_THROWS_AS((void)b.coeff(Monomial::from_exponents(exps)), jet_error);
  }
  SUBCASE("truncation can only lower the order") {
    CHECK(a.truncated(2).order() == 2);
    CHECK_THROWS_AS((void)a.truncated(6), insufficient_order_error);
  }
  SUBCASE("differentiating an order-zero jet has no valid result") {
    Jet c = Jet::constant(3, 0, Rational(5));
    CHECK_THROWS_AS((void)c.partial(0), insufficient_order_error);
  }
  SUBCASE("inverting a jet with zero constant term is rejected") {
    CHECK_THROWS_AS((void)inverse(a), jet_error);
  }
}

TEST_CASE("elementary series compose exactly") {
  JetGen gen(90210, 3, 7);
  for (int it = 0; it < 40; ++it) {
    Jet a = gen();
    // strip the constant term: exp/sin/cos expand around 0
    Jet a0 = a - Jet::constant(a.vars(), a.order(), a.constant_term());

    CHECK(log_jet(exp_jet(a0)) == a0);
    CHECK(sin_jet(a0) * sin_jet(a0) + cos_jet(a0) * cos_jet(a0) ==
          Jet::constant(a.vars(), a.order(), Rational(1)));

    Jet u = Jet::constant(a.vars(), a.order(), rat(9, 4)) * (Jet::constant(a.vars(), a.order(), Rational(1)) + a0);
    Jet r = sqrt_jet(u);
    CHECK(r * r == u);
  }

  Jet bad = Jet::constant(2, 4, Rational(1));
  CHECK_THROWS_AS((void)exp_jet(bad), jet_error);
  Jet bad2 = Jet::constant(2, 4, Rational(2));
  CHECK_THROWS_AS((void)log_jet(bad2), jet_error);
  Jet bad3 = Jet::constant(2, 4, Rational(2));  // 2 is not a rational square
  CHECK_THROWS_AS((void)sqrt_jet(bad3), jet_error);
}

TEST_CASE("widening preserves every coefficient") {
  JetGen gen(111, 3, 5);
  Jet a = gen();
  Jet w = a.widened(6);
  CHECK(w.vars() == 6);
  CHECK(w.order() == a.order());
  for (const auto& [m, c] : a.terms()) CHECK(w.coeff(m) == c);
}
