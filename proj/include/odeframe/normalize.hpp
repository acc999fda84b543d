#pragma once

#include <optional>
#include <vector>

#include "odeframe/chart.hpp"
#include "odeframe/directional.hpp"
#include "odeframe/vfield.hpp"

namespace odeframe {

/// Raised when a quantity the theory forces to vanish fails to do so: that
/// indicates a defect in this library (or inconsistent input data), never a
/// property of the equation under study.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coefficients of ad^{k+1}_X(V) in the frame (X, V, ad_X V, …, ad^k_X V).
struct AdExpansion {
  Jet a_x;             ///< coefficient on X
  std::vector<Jet> a;  ///< a[i] = coefficient on ad^i_X V, i = 0..k
  std::vector<VField> chain;  ///< V, ad_X V, …, ad^k_X V
  VField target;              ///< ad^{k+1}_X V
};

AdExpansion ad_expansion(const VField& x, const VField& v, int k, int order);

/// Free data for the two rescalings. The gauges are t-free jet layers with
/// zero constant term; they parameterize the directions the defining
/// equations leave undetermined and must not affect any invariant.
struct NormalizeOptions {
  Rational f0 = Rational(1);   ///< value of f at the point (nonzero)
  Rational xf0 = Rational(0);  ///< value of X(f) at the point
  Rational g0 = Rational(1);   ///< value of g at the point (nonzero)
  std::optional<Jet> g1_gauge;
  std::optional<Jet> f_gauge0;
  std::optional<Jet> f_gauge1;
  std::optional<Jet> g2_gauge;
};

/// The normalized pair X = f·X_in, V = g·V_in together with the residual
/// expansion coefficients a_0..a_{k−2} of ad^{k+1}_X(V). Their joint
/// vanishing at the point is the classical Wünschmann condition.
struct ReferenceFrame {
  Chart chart;
  int k = 0;
  VField x, v;
  Jet f, g;
  Jet a_x;                    ///< X-coefficient of the normalized expansion
  std::vector<Jet> residuals; ///< a_0..a_{k−2}
  bool wunschmann = false;    ///< all residual constant terms zero
};

ReferenceFrame normalize_pair(const Chart& chart, const VField& x_in, const VField& v_in, int k,
                              int order, const NormalizeOptions& opts = {});

struct WunschmannReport {
  std::vector<Jet> residuals;
  bool satisfied = false;
};

WunschmannReport wunschmann_residuals(const ReferenceFrame& ref);

}  // namespace odeframe
