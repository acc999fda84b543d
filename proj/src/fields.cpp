#include "odeframe/fields.hpp"

namespace odeframe {

VField equation_field(const Chart& chart, const Expr& rhs, int order) {
  if (rhs.max_coordinate() > chart.k)
    throw jet_error("right-hand side uses a derivative order beyond k");
  VField x = VField::zero(chart.vars());
  x.comp[chart.t_index()] = chart.constant(Rational(1));
  for (int i = 0; i < chart.k; ++i)
    x.comp[chart.x_index(i)] = chart.coordinate(chart.x_index(i + 1));
  x.comp[chart.x_index(chart.k)] = rhs.expand(chart.point, chart.vars(), order);
  return x;
}

VField vertical_field(const Chart& chart) {
  return VField::axis(chart, chart.x_index(chart.k));
}

}  // namespace odeframe
