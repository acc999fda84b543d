#pragma once

#include <string>
#include <utility>
#include <vector>

namespace odeframe {

/// Ordered key = value document; one invariant per line, exact rationals and
/// verdict words only, so identical runs serialize byte-identically.
class Report {
 public:
  void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  // A const char* would otherwise prefer the bool overload.
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, bool verdict) { add(key, verdict ? "true" : "false"); }
  void add(const std::string& key, long value) { add(key, std::to_string(value)); }

  const std::vector<std::pair<std::string, std::string>>& lines() const { return lines_; }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

}  // namespace odeframe
