#include "odeframe/problem.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "odeframe/monomial.hpp"

namespace odeframe {

std::vector<Rational> default_base_point(int k) {
  std::vector<Rational> p;
  p.reserve(k + 2);
  p.push_back(Rational(0));
  for (int i = 0; i <= k; ++i) p.push_back(rat(i + 1, 7));
  return p;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Rational require_rational(const std::string& key, const std::string& value) {
  auto q = parse_rational(value);
  if (!q) throw input_error("problem key '" + key + "': expected a rational, got '" + value + "'");
  return *q;
}

long require_integer(const std::string& key, const std::string& value, long lo, long hi) {
  try {
    std::size_t used = 0;
    long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    if (v < lo || v > hi) throw input_error("problem key '" + key + "' out of range: " + value);
    return v;
  } catch (const input_error&) {
    throw;
  } catch (const std::exception&) {
    throw input_error("problem key '" + key + "': expected an integer, got '" + value + "'");
  }
}

}  // namespace

ProblemSpec parse_problem_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw input_error("problem line " + std::to_string(lineno) + ": expected key = value");
    std::string key = strip(s.substr(0, eq));
    std::string value = strip(s.substr(eq + 1));
    if (key.empty() || value.empty())
      throw input_error("problem line " + std::to_string(lineno) + ": empty key or value");
    if (!kv.emplace(key, value).second)
      throw input_error("problem line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }

  auto take = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) return std::pair<bool, std::string>{false, ""};
    std::string v = it->second;
    kv.erase(it);
    return std::pair<bool, std::string>{true, v};
  };

  ProblemSpec p;
  auto [has_k, k_text] = take("k");
  if (!has_k) throw input_error("problem file is missing the key 'k'");
  long k = require_integer("k", k_text, -1000, 1000);
  if (k <= 2) throw input_error("k must exceed 2");
  // k+5 chart variables must fit the packed monomial encoding.
  if (k + 5 > Monomial::kMaxVars)
    throw input_error("k too large for the packed monomial encoding (k <= 10)");
  p.k = static_cast<int>(k);

  auto [has_rhs, rhs_text] = take("rhs");
  if (!has_rhs) throw input_error("problem file is missing the key 'rhs'");
  p.rhs_text = rhs_text;
  try {
    p.rhs = parse_expr(rhs_text, p.k);
  } catch (const parse_error& e) {
    throw input_error(std::string("rhs: ") + e.what());
  }

  p.base_point = default_base_point(p.k);
  if (auto [has, v] = take("point.t"); has) p.base_point[0] = require_rational("point.t", v);
  for (int i = 0; i <= p.k; ++i) {
    std::string key = "point.x" + std::to_string(i);
    if (auto [has, v] = take(key); has) p.base_point[1 + i] = require_rational(key, v);
  }
  if (auto [has, v] = take("fiber.F0"); has) p.fiber[0] = require_rational("fiber.F0", v);
  if (auto [has, v] = take("fiber.F1"); has) p.fiber[1] = require_rational("fiber.F1", v);
  if (auto [has, v] = take("fiber.G"); has) p.fiber[2] = require_rational("fiber.G", v);
  if (odeframe::is_zero(p.fiber[0])) throw input_error("fiber.F0 must be nonzero");
  if (odeframe::is_zero(p.fiber[2])) throw input_error("fiber.G must be nonzero");

  p.order = 2 * p.k + 8;
  if (auto [has, v] = take("order"); has)
    p.order = static_cast<int>(require_integer("order", v, 1, 80));
  p.samples = 3;
  if (auto [has, v] = take("samples"); has)
    p.samples = static_cast<int>(require_integer("samples", v, 2, 64));
  if (auto [has, v] = take("seed"); has)
    p.seed = static_cast<std::uint64_t>(require_integer("seed", v, 0, 1000000000L));

  if (!kv.empty()) throw input_error("unknown problem key '" + kv.begin()->first + "'");
  return p;
}

ProblemSpec parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

}  // namespace odeframe
