#include "odeframe/monomial.hpp"

#include <sstream>

namespace odeframe {

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  if (m.degree() == 0) return "1";
  std::ostringstream out;
  bool first = true;
  for (int v = 0; v < Monomial::kMaxVars; ++v) {
    int e = m.exponent(v);
    if (e == 0) continue;
    if (!first) out << "*";
    first = false;
    if (v < static_cast<int>(names.size()))
      out << names[v];
    else
      out << "v" << v;
    if (e > 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace odeframe
