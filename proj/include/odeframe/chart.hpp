#pragma once

#include <string>
#include <vector>

#include "odeframe/jet.hpp"
#include "odeframe/rational.hpp"

namespace odeframe {

/// Coordinate chart: an ordered list of variable names together with the
/// expansion point. Base charts carry (t, x0..xk); bundle charts append the
/// fiber coordinates (F0, F1, G).
struct Chart {
  int k = 0;
  bool has_fiber = false;
  std::vector<std::string> names;
  std::vector<Rational> point;

  int vars() const { return static_cast<int>(names.size()); }
  int t_index() const { return 0; }
  int x_index(int i) const { return 1 + i; }
  int f0_index() const { return k + 2; }
  int f1_index() const { return k + 3; }
  int g_index() const { return k + 4; }

  /// Coordinate function as a jet. Coordinates are polynomials, known
  /// exactly, so they carry the maximal validity order.
  Jet coordinate(int var) const {
    return Jet::coordinate(vars(), Monomial::kMaxDegree, var, point.at(var));
  }
  Jet constant(const Rational& c) const {
    return Jet::constant(vars(), Monomial::kMaxDegree, c);
  }
  Jet zero() const { return Jet(vars(), Monomial::kMaxDegree); }
};

/// Chart (t, x0, ..., xk) around the given point (length k+2, t first).
Chart make_base_chart(int k, std::vector<Rational> point);

/// Extends a base chart by the fiber coordinates (F0, F1, G) at the given
/// fiber point. Jets on the base lift by Jet::widened (monomials unchanged).
Chart extend_chart_to_bundle(const Chart& base, const Rational& f0, const Rational& f1,
                             const Rational& g);

}  // namespace odeframe
