#pragma once

#include "odeframe/chart.hpp"
#include "odeframe/expr.hpp"
#include "odeframe/vfield.hpp"

namespace odeframe {

/// The total-derivative field of x^(k+1) = F(t, x0, …, xk) on the base chart:
/// ∂_t + Σ_{i<k} x_{i+1}·∂_{x_i} + F·∂_{x_k}. The right-hand side is expanded
/// as a jet at the chart's expansion point, to the given order.
VField equation_field(const Chart& chart, const Expr& rhs, int order);

/// The vertical direction ∂_{x_k}.
VField vertical_field(const Chart& chart);

}  // namespace odeframe
