#include "odeframe/directional.hpp"

#include <algorithm>

namespace odeframe {

Jet slice(const Jet& j, int var, int m) {
  if (m < 0) throw jet_error("slice exponent must be nonnegative");
  if (j.order() < m) throw insufficient_order_error("slice beyond jet validity order");
  Jet out(j.vars(), j.order() - m);
  for (const auto& [mono, c] : j.terms()) {
    if (mono.exponent(var) != m) continue;
    Monomial r = mono;
    r.set_exponent_raw(var, 0);
    r.hi -= std::uint64_t(m) << 56;
    out.set_coeff(r, c);
  }
  return out;
}

Jet unslice(const Jet& s, int var, int m, int order) {
  Monomial shift;
  shift.set_exponent_raw(var, m);
  shift.hi += std::uint64_t(m) << 56;
  Jet out(s.vars(), order);
  for (const auto& [mono, c] : s.terms()) {
    Monomial r = mono * shift;
    if (r.degree() > order) continue;
    out.set_coeff(r, c);
  }
  return out;
}

bool is_free_of(const Jet& j, int var) {
  for (const auto& [mono, c] : j.terms()) {
    (void)c;
    if (mono.exponent(var) != 0) return false;
  }
  return true;
}

namespace {

void check_directional_inputs(const VField& x, const Jet& gauge, const char* what) {
  const Jet& xt = x.comp.at(0);
  if (!(xt.term_count() == 1 && xt.constant_term() == Rational(1)))
    throw jet_error(std::string(what) + " requires a field with unit t-component");
  if (!is_free_of(gauge, 0))
    throw jet_error(std::string(what) + " gauge layer must not involve t");
  if (!odeframe::is_zero(gauge.constant_term()) || gauge.vars() != x.vars())
    throw jet_error(std::string(what) + " gauge layer must have zero constant term and matching chart");
}

}  // namespace

Jet solve_scale_equation(const VField& x, const Jet& h, const Rational& init, const Jet& gauge,
                         int cap) {
  check_directional_inputs(x, gauge, "scale equation");
  int og = std::min({x.order(), is_exact_zero(h) ? Monomial::kMaxDegree : h.order() + 1, cap});
  if (og < 1) throw insufficient_order_error("scale equation: no room below the validity order");

  Jet g = Jet::constant(x.vars(), og, init);
  g += gauge.truncated(std::min(og, gauge.order()));
  for (int m = 0; m + 1 <= og; ++m) {
    // With the t^(m+1)-layer still missing, slice m of the residual equals
    // (m+1)·(missing layer) plus known lower-layer contributions.
    Jet rho = x.apply(g) - h * g;
    Jet s = slice(rho, 0, m);
    if (s.is_zero()) continue;
    Jet layer = rat(-1, m + 1) * s;
    g += unslice(layer, 0, m + 1, og);
  }
  return g;
}

Jet solve_projective_equation(const VField& x, const Jet& c, const Rational& f0,
                              const Rational& xf0, const Jet& gauge0, const Jet& gauge1,
                              int cap) {
  check_directional_inputs(x, gauge0, "projective equation");
  check_directional_inputs(x, gauge1, "projective equation");
  if (odeframe::is_zero(f0)) throw jet_error("projective equation needs a nonzero point value");
  int of = std::min({x.order(), is_exact_zero(c) ? Monomial::kMaxDegree : c.order() + 2, cap});
  if (of < 2) throw insufficient_order_error("projective equation: no room below the validity order");

  Jet f = Jet::constant(x.vars(), of, f0);
  f += gauge0.truncated(std::min(of, gauge0.order()));
  f += unslice(gauge1.truncated(std::min(of - 1, gauge1.order())), 0, 1, of);
  // Shift the t-linear constant so the directional derivative at the point
  // comes out to xf0.
  {
    Rational c0 = x.apply(f).constant_term();
    Jet corr(x.vars(), of);
    corr.set_coeff(Monomial::unit(0), xf0 - c0);
    f += corr;
  }

  // The t-free layer never changes below; its inverse is reused every round.
  Jet inv0 = inverse(slice(f, 0, 0));

  for (int m = 0; m + 2 <= of; ++m) {
    Jet xf = x.apply(f);
    Jet rho = Rational(2) * (f * x.apply(xf)) - xf * xf - c * (f * f);
    Jet s = slice(rho, 0, m);
    if (s.is_zero()) continue;
    // Only the 2·f·∂_t² term reaches slice m from the missing t^(m+2)-layer,
    // contributing 2·(t-free layer of f)·(m+2)(m+1)·(missing layer).
    Jet layer = rat(-1, 2L * (m + 2) * (m + 1)) * (s * inv0.truncated(s.order()));
    f += unslice(layer, 0, m + 2, of);
  }
  return f;
}

}  // namespace odeframe
