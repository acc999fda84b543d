#include "doctest.h"

#include "odeframe/bundle.hpp"
#include "odeframe/fields.hpp"
#include "odeframe/problem.hpp"

using namespace odeframe;

namespace {

ReferenceFrame make_ref(const std::string& rhs, int k, int order) {
  Chart ch = make_base_chart(k, default_base_point(k));
  auto F = parse_expr(rhs, k);
  return normalize_pair(ch, equation_field(ch, *F, order), vertical_field(ch), k, order);
}

}  // namespace

TEST_CASE("fundamental vertical fields act on their own coordinates") {
  ReferenceFrame ref = make_ref("0", 3, 14);
  BundleChart bc = make_bundle_chart(ref, Rational(1), Rational(0), Rational(1), 14);
  const Chart& ch = bc.chart;

  // BG = G d/dG: applying it to the coordinate G returns G itself.
  Jet g = ch.coordinate(ch.g_index()).truncated(10);
  CHECK(agree_to_common_order(bc.bg.apply(g), g));
  CHECK(bc.bg.apply(ch.coordinate(ch.f0_index()).truncated(10)).is_zero());

  // BF0 = F0 d/dF0, BF1 = F0 d/dF1.
  Jet f0 = ch.coordinate(ch.f0_index()).truncated(10);
  Jet f1 = ch.coordinate(ch.f1_index()).truncated(10);
  CHECK(agree_to_common_order(bc.bf0.apply(f0), f0));
  CHECK(bc.bf0.apply(f1).is_zero());
  CHECK(agree_to_common_order(bc.bf1.apply(f1), f0));
  CHECK(bc.bf1.apply(f0).is_zero());
}

TEST_CASE("horizontal lift scales the base flow by the fiber coordinate") {
  ReferenceFrame ref = make_ref("x0^2", 3, 16);

  // At a fiber point with F1 = 0 the lift is X/F0 plus no vertical terms.
  BundleChart bc = make_bundle_chart(ref, Rational(2), Rational(0), Rational(1), 16);
  VField bx = lift_x(bc);
  auto base_vals = ref.x.at_point();
  auto lift_vals = bx.at_point();
  for (int i = 0; i < ref.chart.vars(); ++i) CHECK(lift_vals[i] == base_vals[i] / Rational(2));
  CHECK(is_zero(lift_vals[bc.chart.f0_index()]));
  CHECK(is_zero(lift_vals[bc.chart.f1_index()]));
  CHECK(is_zero(lift_vals[bc.chart.g_index()]));
}

TEST_CASE("horizontal lift acquires vertical terms away from F1 = 0") {
  ReferenceFrame ref = make_ref("0", 3, 14);
  Rational f0v(2), f1v(3), gv = rat(1, 2);
  BundleChart bc = make_bundle_chart(ref, f0v, f1v, gv, 14);
  VField bx = lift_x(bc);
  auto vals = bx.at_point();

  CHECK(vals[bc.chart.f0_index()] == Rational(-2) * f1v);
  CHECK(vals[bc.chart.f1_index()] == -f1v * f1v / f0v);
  CHECK(vals[bc.chart.g_index()] == Rational(-3) * f1v / f0v * gv);
}

TEST_CASE("bundle chart rejects degenerate fiber points") {
  ReferenceFrame ref = make_ref("0", 3, 14);
  CHECK_THROWS(make_bundle_chart(ref, Rational(0), Rational(0), Rational(1), 14));
  CHECK_THROWS(make_bundle_chart(ref, Rational(1), Rational(0), Rational(0), 14));
}
