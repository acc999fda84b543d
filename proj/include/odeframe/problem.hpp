#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "odeframe/expr.hpp"

namespace odeframe {

/// Raised on malformed or out-of-contract user input (problem files,
/// expressions, command-line values).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A parsed problem statement: the equation x^(k+1) = F(t, x0, …, xk)
/// together with the expansion point and solver knobs.
struct ProblemSpec {
  int k = 0;
  std::string rhs_text;
  ExprPtr rhs;
  std::vector<Rational> base_point;       ///< t, x0..xk
  std::array<Rational, 3> fiber{Rational(1), Rational(0), Rational(1)};  ///< F0, F1, G
  int order = 0;                          ///< jet order N; default 2k+8
  int samples = 3;                        ///< flatness sample points (≥ 2)
  std::uint64_t seed = 0;                 ///< sample-point RNG seed
};

/// Default expansion point: t = 0, x_i = (i+1)/7 — small, distinct rationals
/// keeping generic expressions away from coordinate degeneracies.
std::vector<Rational> default_base_point(int k);

/// Parses the flat key = value format (keys: k, rhs, point.t, point.x<i>,
/// fiber.F0, fiber.F1, fiber.G, order, samples, seed; '#' comments).
ProblemSpec parse_problem_text(const std::string& text);
ProblemSpec parse_problem_file(const std::string& path);

}  // namespace odeframe
