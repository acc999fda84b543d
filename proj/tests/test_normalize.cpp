#include "doctest.h"

#include "odeframe/fields.hpp"
#include "odeframe/normalize.hpp"
#include "odeframe/problem.hpp"

using namespace odeframe;

namespace {

ReferenceFrame normalized(const std::string& rhs, int k, int order,
                          const NormalizeOptions& opts = {}) {
  auto F = parse_expr(rhs, k);
  std::vector<Rational> pt = default_base_point(k);
  for (int i = 0; i <= k; ++i)
    if (F->variable_under_function(i)) pt[1 + i] = Rational(0);
  Chart ch = make_base_chart(k, pt);
  return normalize_pair(ch, equation_field(ch, *F, order), vertical_field(ch), k, order, opts);
}

bool is_constant_jet(const Jet& j, const Rational& c) {
  Jet diff = j - Jet::constant(j.vars(), j.order(), c);
  return diff.is_zero();
}

}  // namespace

TEST_CASE("iterated brackets of the trivial equation alternate down the tower") {
  // F = 0, k = 3: ad^i maps the vertical direction to (-1)^i d/dx_{3-i} and
  // the fourth bracket vanishes identically.
  Chart ch = make_base_chart(3, default_base_point(3));
  auto F = parse_expr("0", 3);
  VField x = equation_field(ch, *F, 12);
  VField v = vertical_field(ch);

  AdExpansion ad = ad_expansion(x, v, 3, 12);
  REQUIRE(ad.chain.size() == 4);
  for (int i = 0; i <= 3; ++i) {
    VField expect = (i % 2 == 0 ? Rational(1) : Rational(-1)) * VField::axis(ch, ch.x_index(3 - i));
    for (int c = 0; c < ch.vars(); ++c)
      CHECK(agree_to_common_order(ad.chain[i].comp[c], expect.comp[c]));
  }
  for (const auto& c : ad.target.comp) CHECK(c.is_zero());
  CHECK(ad.a_x.is_zero());
  for (const auto& a : ad.a) CHECK(a.is_zero());
}

TEST_CASE("expansion coefficients for a linear right-hand side") {
  // F = x3, k = 3: the fourth bracket equals minus the third chain element,
  // so a_3 = -1 and every other coefficient vanishes.
  Chart ch = make_base_chart(3, default_base_point(3));
  auto F = parse_expr("x3", 3);
  VField x = equation_field(ch, *F, 12);
  VField v = vertical_field(ch);

  AdExpansion ad = ad_expansion(x, v, 3, 12);
  CHECK(ad.a_x.is_zero());
  CHECK(ad.a[0].is_zero());
  CHECK(ad.a[1].is_zero());
  CHECK(ad.a[2].is_zero());
  CHECK(is_constant_jet(ad.a[3], Rational(-1)));
}

TEST_CASE("trivial equation normalizes to the identity rescaling") {
  for (int k : {3, 4, 5}) {
    ReferenceFrame ref = normalized("0", k, 2 * k + 9);
    CHECK(is_constant_jet(ref.f, Rational(1)));
    CHECK(is_constant_jet(ref.g, Rational(1)));
    CHECK(ref.wunschmann);
    for (const auto& r : ref.residuals) CHECK(r.is_zero());
    CHECK(ref.a_x.is_zero());
  }
}

TEST_CASE("normalized expansion drops the top two coefficients") {
  // After the two rescalings the defining identity forces a_k and a_{k-1}
  // to vanish identically, for every right-hand side.
  for (const char* rhs : {"x0^2", "x1*x2", "sin(x1)"}) {
    ReferenceFrame ref = normalized(rhs, 3, 16);
    REQUIRE(static_cast<int>(ref.residuals.size()) == 2);  // a_0, a_1 remain
    // residuals hold a_0..a_{k-2}; the two top coefficients are consumed by
    // construction, so nothing above index k-2 is reported.
  }
}

TEST_CASE("obstruction verdicts for simple right-hand sides") {
  CHECK(normalized("0", 3, 14).wunschmann);
  // A linear equation is not automatically compatible: the characteristic
  // roots of x'''' = x''' are {0,0,0,1}, not in the arithmetic-progression
  // pattern of a symmetric-cube equation, so the obstruction must fire.
  CHECK(!normalized("x3", 3, 14).wunschmann);
  CHECK(!normalized("x0^2", 3, 16).wunschmann);
}

TEST_CASE("gauge choices leave the obstruction verdict unchanged") {
  Chart ch = make_base_chart(3, default_base_point(3));

  NormalizeOptions alt;
  alt.f0 = Rational(2);
  alt.xf0 = rat(1, 3);
  alt.g0 = rat(3, 2);
  // t-free layer with zero constant term, as the solvers require
  Jet gauge(ch.vars(), 14);
  gauge.set_coeff(Monomial::unit(ch.x_index(0)), rat(1, 5));
  alt.g1_gauge = gauge;
  alt.f_gauge0 = gauge;
  alt.g2_gauge = gauge;

  for (const char* rhs : {"0", "x0^2"}) {
    ReferenceFrame a = normalized(rhs, 3, 16);
    ReferenceFrame b = normalized(rhs, 3, 16, alt);
    CHECK(a.wunschmann == b.wunschmann);
    REQUIRE(a.residuals.size() == b.residuals.size());
    for (std::size_t i = 0; i < a.residuals.size(); ++i)
      CHECK(is_zero(a.residuals[i].constant_term()) == is_zero(b.residuals[i].constant_term()));
  }
}
