#pragma once

#include "odeframe/jet.hpp"
#include "odeframe/vfield.hpp"

namespace odeframe {

/// Terms of j with exponent exactly m in `var`, with that power divided out;
/// validity order drops by m.
Jet slice(const Jet& j, int var, int m);

/// s ↦ var^m · s, truncated to `order`.
Jet unslice(const Jet& s, int var, int m, int order);

/// True when no term of j involves `var`.
bool is_free_of(const Jet& j, int var);

/// Solves X(g) = h·g for the jet g, recursively in the t-direction (t = the
/// chart variable 0; X must have ∂_t-component exactly 1). The t-free layer
/// of g is free data: constant term `init` plus the t-free `gauge` jet
/// (zero constant term). Result order min(order(X), order(h)+1, cap).
Jet solve_scale_equation(const VField& x, const Jet& h, const Rational& init, const Jet& gauge,
                         int cap);

/// Solves 2·f·X²(f) − X(f)² = c·f² for the jet f, recursively in the
/// t-direction. Free data: the t-free layer (constant `f0` ≠ 0 plus
/// `gauge0`) and the t-linear layer (`gauge1`, with the constant chosen so
/// that X(f) at the point equals `xf0`). Result order
/// min(order(X), order(c)+2, cap).
Jet solve_projective_equation(const VField& x, const Jet& c, const Rational& f0,
                              const Rational& xf0, const Jet& gauge0, const Jet& gauge1,
                              int cap);

}  // namespace odeframe
