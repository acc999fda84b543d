#pragma once

#include <vector>

#include "odeframe/chart.hpp"
#include "odeframe/jet.hpp"

namespace odeframe {

/// True for the zero jet created as an exact zero (unlimited validity), as
/// opposed to a computed jet that merely has no terms up to its order.
inline bool is_exact_zero(const Jet& j) {
  return j.is_zero() && j.order() == Monomial::kMaxDegree;
}

/// Vector field on a chart: one coefficient jet per chart variable.
struct VField {
  std::vector<Jet> comp;

  static VField zero(int vars) {
    VField f;
    f.comp.assign(vars, Jet(vars, Monomial::kMaxDegree));
    return f;
  }

  /// The coordinate field ∂_var (exact).
  static VField axis(const Chart& chart, int var);

  int vars() const { return static_cast<int>(comp.size()); }

  /// Validity order: minimum over components (exact zeros do not count).
  int order() const;

  /// Directional derivative of a scalar jet.
  Jet apply(const Jet& f) const;

  /// Constant-term column vector at the expansion point.
  std::vector<Rational> at_point() const;

  VField truncated(int order) const;
  VField widened(int new_vars) const;

  VField operator-() const;
  friend VField operator+(const VField& a, const VField& b);
  friend VField operator-(const VField& a, const VField& b);
  friend VField operator*(const Jet& s, const VField& a);
  friend VField operator*(const Rational& s, const VField& a);
};

/// [A,B]^i = A(B^i) − B(A^i); validity order drops by one.
VField lie_bracket(const VField& a, const VField& b);

/// i-fold bracket ad_A^i B = [A, [A, ... [A, B]]].
VField ad_power(const VField& a, const VField& b, int i);

/// Rank of a rational matrix (rows), by exact Gaussian elimination.
int rational_rank(std::vector<std::vector<Rational>> rows);

/// LU factorization of the frame's component matrix over the jet ring,
/// pivoting on entries with invertible constant term. Reusable across many
/// right-hand sides; `order` caps the working jet order of the solve.
class FrameExpander {
 public:
  FrameExpander(const std::vector<VField>& frame, int order);

  /// Coefficients c with w = Σ c_i frame_i (exactly, up to common order).
  std::vector<Jet> expand(const VField& w) const;

  int order() const { return order_; }

 private:
  int n_ = 0;
  int order_ = 0;
  std::vector<int> perm_;
  std::vector<std::vector<Jet>> lu_;  // unit-lower multipliers below, U on/above
  std::vector<Jet> inv_diag_;
};

/// One-shot convenience wrapper around FrameExpander.
std::vector<Jet> frame_expand(const VField& w, const std::vector<VField>& frame, int order);

/// Pointwise regularity of the pair (X, V): the constant-term vectors of
/// {X, V, ad_X V, ..., ad^i_X V} must have rank i+2 for i = 1..k, filling
/// the tangent space at i = k. `profile` holds those ranks.
struct RegularityResult {
  bool regular = false;
  std::vector<int> profile;  // ranks at i = 1..k
};
RegularityResult regularity_check(const VField& x, const VField& v, int k);

}  // namespace odeframe
