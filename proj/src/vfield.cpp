#include "odeframe/vfield.hpp"

#include <algorithm>
#include <stdexcept>

namespace odeframe {

VField VField::axis(const Chart& chart, int var) {
  VField f = zero(chart.vars());
  f.comp[var] = chart.constant(Rational(1));
  return f;
}

int VField::order() const {
  int o = Monomial::kMaxDegree;
  for (const auto& c : comp)
    if (!is_exact_zero(c)) o = std::min(o, c.order());
  return o;
}

Jet VField::apply(const Jet& f) const {
  Jet acc(f.vars(), Monomial::kMaxDegree);
  for (int v = 0; v < vars(); ++v) {
    if (is_exact_zero(comp[v])) continue;
    acc = acc + comp[v] * f.partial(v);
  }
  return acc;
}

std::vector<Rational> VField::at_point() const {
  std::vector<Rational> col;
  col.reserve(comp.size());
  for (const auto& c : comp) col.push_back(c.constant_term());
  return col;
}

VField VField::truncated(int order) const {
  VField f;
  f.comp.reserve(comp.size());
  for (const auto& c : comp) f.comp.push_back(c.truncated(std::min(order, c.order())));
  return f;
}

VField VField::widened(int new_vars) const {
  VField f;
  f.comp.reserve(new_vars);
  for (const auto& c : comp) f.comp.push_back(c.widened(new_vars));
  while (f.vars() < new_vars) f.comp.push_back(Jet(new_vars, Monomial::kMaxDegree));
  return f;
}

VField VField::operator-() const {
  VField f;
  f.comp.reserve(comp.size());
  for (const auto& c : comp) f.comp.push_back(-c);
  return f;
}

VField operator+(const VField& a, const VField& b) {
  if (a.vars() != b.vars()) throw jet_error("vector field variable count mismatch");
  VField f;
  f.comp.reserve(a.comp.size());
  for (int v = 0; v < a.vars(); ++v) {
    if (is_exact_zero(a.comp[v])) {
      f.comp.push_back(b.comp[v]);
    } else if (is_exact_zero(b.comp[v])) {
      f.comp.push_back(a.comp[v]);
    } else {
      f.comp.push_back(a.comp[v] + b.comp[v]);
    }
  }
  return f;
}

VField operator-(const VField& a, const VField& b) { return a + (-b); }

VField operator*(const Jet& s, const VField& a) {
  VField f;
  f.comp.reserve(a.comp.size());
  for (const auto& c : a.comp)
    f.comp.push_back(is_exact_zero(c) ? c : s * c);
  return f;
}

VField operator*(const Rational& s, const VField& a) {
  VField f;
  f.comp.reserve(a.comp.size());
  for (const auto& c : a.comp) f.comp.push_back(s * c);
  return f;
}

VField lie_bracket(const VField& a, const VField& b) {
  if (a.vars() != b.vars()) throw jet_error("vector field variable count mismatch");
  VField f;
  f.comp.reserve(a.comp.size());
  for (int v = 0; v < a.vars(); ++v) {
    Jet left = is_exact_zero(b.comp[v]) ? b.comp[v] : a.apply(b.comp[v]);
    Jet right = is_exact_zero(a.comp[v]) ? a.comp[v] : b.apply(a.comp[v]);
    if (is_exact_zero(right))
      f.comp.push_back(left);
    else if (is_exact_zero(left))
      f.comp.push_back(-right);
    else
      f.comp.push_back(left - right);
  }
  return f;
}

VField ad_power(const VField& a, const VField& b, int i) {
  VField r = b;
  for (int n = 0; n < i; ++n) r = lie_bracket(a, r);
  return r;
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (is_zero(rows[r][c])) continue;
      Rational m = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= m * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

FrameExpander::FrameExpander(const std::vector<VField>& frame, int order) : order_(order) {
  n_ = static_cast<int>(frame.size());
  if (n_ == 0 || frame[0].vars() != n_)
    throw jet_error("frame size must equal the chart dimension");
  lu_.assign(n_, std::vector<Jet>());
  for (int i = 0; i < n_; ++i) {
    lu_[i].reserve(n_);
    for (int j = 0; j < n_; ++j) {
      const Jet& e = frame[j].comp[i];
      lu_[i].push_back(e.truncated(std::min(order_, e.order())));
    }
  }
  perm_.resize(n_);
  inv_diag_.reserve(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (!is_zero(lu_[r][col].constant_term())) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw jet_error("frame not a basis at expansion point");
    std::swap(lu_[col], lu_[pivot]);
    perm_[col] = pivot;
    inv_diag_.push_back(inverse(lu_[col][col]));
    for (int r = col + 1; r < n_; ++r) {
      Jet m = lu_[r][col] * inv_diag_[col];
      for (int j = col + 1; j < n_; ++j) lu_[r][j] = lu_[r][j] - m * lu_[col][j];
      lu_[r][col] = m;
    }
  }
}

std::vector<Jet> FrameExpander::expand(const VField& w) const {
  if (w.vars() != n_) throw jet_error("vector field variable count mismatch");
  std::vector<Jet> y;
  y.reserve(n_);
  for (int i = 0; i < n_; ++i) {
    const Jet& e = w.comp[i];
    y.push_back(e.truncated(std::min(order_, e.order())));
  }
  for (int col = 0; col < n_; ++col) std::swap(y[col], y[perm_[col]]);
  // forward substitution through the unit-lower multipliers
  for (int col = 0; col < n_; ++col)
    for (int r = col + 1; r < n_; ++r) y[r] = y[r] - lu_[r][col] * y[col];
  // back substitution through U
  std::vector<Jet> c(y);
  for (int r = n_ - 1; r >= 0; --r) {
    Jet acc = y[r];
    for (int j = r + 1; j < n_; ++j) acc = acc - lu_[r][j] * c[j];
    c[r] = acc * inv_diag_[r];
  }
  return c;
}

std::vector<Jet> frame_expand(const VField& w, const std::vector<VField>& frame, int order) {
  return FrameExpander(frame, order).expand(w);
}

RegularityResult regularity_check(const VField& x, const VField& v, int k) {
  RegularityResult res;
  std::vector<std::vector<Rational>> rows;
  rows.push_back(x.at_point());
  rows.push_back(v.at_point());
  if (rational_rank(rows) != 2) return res;
  VField ad = v;
  for (int i = 1; i <= k; ++i) {
    ad = lie_bracket(x, ad);
    rows.push_back(ad.at_point());
    res.profile.push_back(rational_rank(rows));
  }
  res.regular = true;
  for (int i = 1; i <= k; ++i)
    if (res.profile[i - 1] != i + 2) res.regular = false;
  return res;
}

}  // namespace odeframe
