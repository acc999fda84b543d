#include "odeframe/bundle.hpp"

namespace odeframe {

BundleChart make_bundle_chart(const ReferenceFrame& ref, const Rational& f0, const Rational& f1,
                              const Rational& g, int order) {
  BundleChart bc;
  bc.chart = extend_chart_to_bundle(ref.chart, f0, f1, g);
  bc.k = ref.k;
  bc.base_order = order;
  const int n = bc.chart.vars();
  bc.x_ref = ref.x.widened(n);
  bc.v_ref = ref.v.widened(n);

  bc.bg = VField::zero(n);
  bc.bg.comp[bc.chart.g_index()] = bc.chart.coordinate(bc.chart.g_index());
  bc.bf0 = VField::zero(n);
  bc.bf0.comp[bc.chart.f0_index()] = bc.chart.coordinate(bc.chart.f0_index());
  bc.bf1 = VField::zero(n);
  bc.bf1.comp[bc.chart.f1_index()] = bc.chart.coordinate(bc.chart.f0_index());
  return bc;
}

VField lift_x(const BundleChart& bc) {
  const Chart& ch = bc.chart;
  const int n = ch.vars();
  Jet f0 = ch.coordinate(ch.f0_index()).truncated(bc.base_order);
  Jet f1 = ch.coordinate(ch.f1_index()).truncated(bc.base_order);
  Jet g = ch.coordinate(ch.g_index()).truncated(bc.base_order);
  Jet inv_f0 = inverse(f0);

  VField bx = VField::zero(n);
  for (int v = 0; v < n; ++v) {
    if (is_exact_zero(bc.x_ref.comp[v])) continue;
    bx.comp[v] = bc.x_ref.comp[v] * inv_f0;
  }
  bx.comp[ch.f0_index()] = rat(-2) * f1;
  bx.comp[ch.f1_index()] = -(f1 * f1 * inv_f0);
  bx.comp[ch.g_index()] = rat(-bc.k) * (f1 * inv_f0 * g);
  return bx;
}

}  // namespace odeframe
