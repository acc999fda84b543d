#include "doctest.h"

#include <random>

#include "odeframe/fields.hpp"
#include "odeframe/problem.hpp"
#include "odeframe/vfield.hpp"

using namespace odeframe;

namespace {

struct FieldGen {
  std::mt19937_64 rng;
  int vars;
  int order;

  FieldGen(std::uint64_t seed, int vars, int order) : rng(seed), vars(vars), order(order) {}

  Jet jet() {
    Jet j(vars, order);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> var(0, vars - 1);
    for (int t = 0; t < 5; ++t) {
      int d = deg(rng);
      std::vector<int> exps(vars, 0);
      for (int i = 0; i < d; ++i) exps[var(rng)]++;
      int n = num(rng);
      if (n != 0) j.set_coeff(Monomial::from_exponents(exps), rat(n, den(rng)));
    }
    return j;
  }

  VField operator()() {
    VField f;
    for (int i = 0; i < vars; ++i) f.comp.push_back(jet());
    return f;
  }
};

bool componentwise_zero(const VField& f) {
  for (const auto& c : f.comp)
    if (!c.is_zero()) return false;
  return true;
}

bool componentwise_equal(const VField& a, const VField& b) {
  if (a.vars() != b.vars()) return false;
  for (int i = 0; i < a.vars(); ++i)
    if (!agree_to_common_order(a.comp[i], b.comp[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("Jacobi identity on random vector fields") {
  FieldGen gen(1009, 8, 6);
  for (int it = 0; it < 25; ++it) {
    VField a = gen(), b = gen(), c = gen();
    VField jac = lie_bracket(lie_bracket(a, b), c) + lie_bracket(lie_bracket(b, c), a) +
                 lie_bracket(lie_bracket(c, a), b);
    CHECK(componentwise_zero(jac));
  }
}

TEST_CASE("bracket satisfies the Leibniz rule in its second slot") {
  FieldGen gen(2027, 6, 6);
  for (int it = 0; it < 25; ++it) {
    VField a = gen(), b = gen();
    Jet f = gen.jet();
    VField lhs = lie_bracket(a, f * b);
    VField rhs = a.apply(f) * b + f * lie_bracket(a, b);
    CHECK(componentwise_equal(lhs, rhs));
  }
}

TEST_CASE("bracket is antisymmetric and bilinear") {
  FieldGen gen(3331, 5, 5);
  VField a = gen(), b = gen(), c = gen();
  CHECK(componentwise_equal(lie_bracket(a, b), -lie_bracket(b, a)));
  CHECK(componentwise_equal(lie_bracket(a + b, c), lie_bracket(a, c) + lie_bracket(b, c)));
  CHECK(componentwise_equal(rat(3, 2) * lie_bracket(a, b), lie_bracket(rat(3, 2) * a, b)));
}

TEST_CASE("frame expansion recovers known coefficients") {
  // Build a frame of sheared coordinate axes and a combination with known
  // jet coefficients; the expansion must return them exactly.
  Chart ch = make_base_chart(3, default_base_point(3));
  const int n = ch.vars();
  std::vector<VField> frame;
  for (int i = 0; i < n; ++i) frame.push_back(VField::axis(ch, i));
  // shear: frame_1 += x0 * frame_0, frame_3 -= x2^2 * frame_4
  frame[1] = frame[1] + ch.coordinate(1).truncated(8) * frame[0];
  Jet x2 = ch.coordinate(3).truncated(8);
  frame[3] = frame[3] - (x2 * x2) * frame[4];

  std::vector<Jet> want;
  for (int i = 0; i < n; ++i) {
    Jet c = ch.coordinate((i + 1) % n).truncated(8);
    want.push_back(c * c + ch.constant(rat(i + 1, 3)).truncated(8));
  }
  VField w = VField::zero(n);
  for (int i = 0; i < n; ++i) w = w + want[i] * frame[i];

  std::vector<Jet> got = frame_expand(w, frame, 8);
  for (int i = 0; i < n; ++i) CHECK(agree_to_common_order(got[i], want[i]));
}

TEST_CASE("equation field brackets down the contact tower") {
  // k = 3, F = x1*x3: ad_X(V) for V the vertical direction has the classical
  // form -d/dx2 - (dF/dx3) d/dx3.
  Chart ch = make_base_chart(3, {Rational(0), rat(1, 7), rat(2, 7), rat(3, 7), rat(4, 7)});
  auto F = parse_expr("x1*x3", 3);
  VField x = equation_field(ch, *F, 10);
  VField v = vertical_field(ch);

  VField ad1 = lie_bracket(x, v);
  VField expect = -VField::axis(ch, ch.x_index(2)) -
                  ch.coordinate(ch.x_index(1)).truncated(9) * VField::axis(ch, ch.x_index(3));
  CHECK(componentwise_equal(ad1, expect));
}

TEST_CASE("rank profile of an equation pair grows by one per bracket") {
  for (int k : {3, 4}) {
    Chart ch = make_base_chart(k, default_base_point(k));
    auto F = parse_expr("x0^2", k);
    VField x = equation_field(ch, *F, 2 * k + 6);
    VField v = vertical_field(ch);
    RegularityResult r = regularity_check(x, v, k);
    CHECK(r.regular);
    REQUIRE(static_cast<int>(r.profile.size()) == k);
    for (int i = 1; i <= k; ++i) CHECK(r.profile[i - 1] == i + 2);
  }
}

TEST_CASE("rank computation by exact elimination") {
  std::vector<std::vector<Rational>> rows = {
      {Rational(1), Rational(2), Rational(3)},
      {Rational(2), Rational(4), Rational(6)},
      {Rational(0), Rational(1), Rational(1)},
  };
  CHECK(rational_rank(rows) == 2);
  rows[1][2] = Rational(7);
  CHECK(rational_rank(rows) == 3);
  CHECK(rational_rank({{Rational(0), Rational(0)}}) == 0);
}
