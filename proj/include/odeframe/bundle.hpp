#pragma once

#include "odeframe/normalize.hpp"

namespace odeframe {

/// The reference data transported to a chart with the three group coordinates
/// (F0, F1, G) appended, together with the fundamental vertical fields of the
/// group action.
struct BundleChart {
  Chart chart;        ///< base chart extended by F0, F1, G
  int k = 0;
  int base_order = 0; ///< working order for fiber-coordinate series
  VField x_ref;       ///< reference X, widened to the bundle chart
  VField v_ref;       ///< reference V, widened to the bundle chart
  VField bg, bf0, bf1;
};

/// Extends the reference frame to the bundle chart at the fiber point
/// (f0, f1, g); f0 and g must be nonzero.
BundleChart make_bundle_chart(const ReferenceFrame& ref, const Rational& f0, const Rational& f1,
                              const Rational& g, int order);

/// The horizontal lift of the reference X:
///   BX = (1/F0)·X − 2·F1·(∂/∂F0) − (F1²/F0)·(∂/∂F1) − k·(F1/F0)·G·(∂/∂G).
VField lift_x(const BundleChart& bc);

}  // namespace odeframe
