#include "odeframe/chart.hpp"

#include <stdexcept>

namespace odeframe {

Chart make_base_chart(int k, std::vector<Rational> point) {
  if (k < 3) throw std::invalid_argument("k must exceed 2");
  if (static_cast<int>(point.size()) != k + 2)
    throw std::invalid_argument("base point needs k+2 coordinates (t, x0..xk)");
  Chart c;
  c.k = k;
  c.names.push_back("t");
  for (int i = 0; i <= k; ++i) c.names.push_back("x" + std::to_string(i));
  c.point = std::move(point);
  return c;
}

Chart extend_chart_to_bundle(const Chart& base, const Rational& f0, const Rational& f1,
                             const Rational& g) {
  if (base.has_fiber) throw std::invalid_argument("chart already has fiber coordinates");
  if (is_zero(f0)) throw std::invalid_argument("point outside the structure group orbit: F0 = 0");
  if (is_zero(g)) throw std::invalid_argument("point outside the structure group orbit: G = 0");
  Chart c = base;
  c.has_fiber = true;
  c.names.insert(c.names.end(), {"F0", "F1", "G"});
  c.point.insert(c.point.end(), {f0, f1, g});
  if (c.vars() > Monomial::kMaxVars)
    throw std::invalid_argument("k too large for the packed monomial encoding (k <= 10)");
  return c;
}

}  // namespace odeframe
