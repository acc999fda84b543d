#include "odeframe/report.hpp"

#include <sstream>

namespace odeframe {

std::string Report::str() const {
  std::ostringstream out;
  for (const auto& [key, value] : lines_) out << key << " = " << value << "\n";
  return out.str();
}

}  // namespace odeframe
