#include "odeframe/normalize.hpp"

#include <algorithm>
#include <utility>

namespace odeframe {

namespace {

/// A jet whose every coefficient vanishes up to its validity order. (Distinct
/// from having a zero constant term: this is identical vanishing as far as
/// the truncation can see.)
bool vanishes(const Jet& j) { return j.is_zero(); }

Jet gauge_or_zero(const std::optional<Jet>& g, int vars, int order) {
  if (!g) return Jet(vars, order);
  return *g;
}

}  // namespace

AdExpansion ad_expansion(const VField& x, const VField& v, int k, int order) {
  AdExpansion out;
  out.chain.reserve(k + 1);
  out.chain.push_back(v);
  for (int i = 1; i <= k; ++i) out.chain.push_back(lie_bracket(x, out.chain.back()));
  out.target = lie_bracket(x, out.chain.back());

  std::vector<VField> frame;
  frame.reserve(k + 2);
  frame.push_back(x);
  for (const auto& w : out.chain) frame.push_back(w);
  std::vector<Jet> coeffs = frame_expand(out.target, frame, order);
  out.a_x = coeffs[0];
  out.a.assign(coeffs.begin() + 1, coeffs.end());
  return out;
}

ReferenceFrame normalize_pair(const Chart& chart, const VField& x_in, const VField& v_in, int k,
                              int order, const NormalizeOptions& opts) {
  if (odeframe::is_zero(opts.f0) || odeframe::is_zero(opts.g0))
    throw jet_error("rescaling point values must be nonzero");
  const int vars = chart.vars();

  // First rescaling: kill the top expansion coefficient. With V1 = g1·V the
  // top coefficient becomes a_k + (k+1)·X(g1)/g1, so g1 solves the scale
  // equation with right-hand side −a_k/(k+1).
  AdExpansion e1 = ad_expansion(x_in, v_in, k, order);
  Jet h1 = rat(-1, k + 1) * e1.a[k];
  Jet g1 = solve_scale_equation(x_in, h1, opts.g0, gauge_or_zero(opts.g1_gauge, vars, order),
                                order);
  VField v1 = g1 * v_in;

  // Recompute the expansion rather than updating it algebraically; the top
  // coefficient must now vanish identically, and the next one is the source
  // term for the second rescaling.
  AdExpansion e2 = ad_expansion(x_in, v1, k, order);
  if (!vanishes(e2.a[k]))
    throw consistency_error("first rescaling failed to kill the top expansion coefficient");
  const Jet& src = e2.a[k - 1];

  // Second rescaling X' = f·X: requiring the order-k coefficient of the
  // rescaled expansion to vanish forces 2·f·X²(f) − X(f)² = c·f² with
  // c = 24/(k(k+1)(k+2))·(current order-(k−1) coefficient), and then the
  // V-rescaling g2 solving X(g2)/g2 = −(k/2)·X(f)/f keeps the top
  // coefficient dead.
  Jet c = rat(24, static_cast<long>(k) * (k + 1) * (k + 2)) * src;
  Jet f = solve_projective_equation(x_in, c, opts.f0, opts.xf0,
                                    gauge_or_zero(opts.f_gauge0, vars, order),
                                    gauge_or_zero(opts.f_gauge1, vars, order), order);
  Jet xf = x_in.apply(f);
  Jet h2 = rat(-k, 2) * (xf * inverse(f.truncated(xf.order())));
  Jet g2 = solve_scale_equation(x_in, h2, Rational(1),
                                gauge_or_zero(opts.g2_gauge, vars, order), order);

  ReferenceFrame ref;
  ref.chart = chart;
  ref.k = k;
  ref.f = f;
  ref.g = g1 * g2;
  ref.x = f * x_in;
  ref.v = ref.g * v_in;

  AdExpansion e3 = ad_expansion(ref.x, ref.v, k, order);
  if (!vanishes(e3.a[k]) || !vanishes(e3.a[k - 1]))
    throw consistency_error("normalized expansion retains a coefficient the rescalings must kill");
  ref.a_x = e3.a_x;
  ref.residuals.assign(e3.a.begin(), e3.a.begin() + (k - 1));
  ref.wunschmann = std::all_of(ref.residuals.begin(), ref.residuals.end(), [](const Jet& j) {
    return odeframe::is_zero(j.constant_term());
  });
  return ref;
}

WunschmannReport wunschmann_residuals(const ReferenceFrame& ref) {
  return WunschmannReport{ref.residuals, ref.wunschmann};
}

}  // namespace odeframe
