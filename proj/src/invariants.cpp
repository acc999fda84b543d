#include "odeframe/invariants.hpp"

#include <algorithm>
#include <utility>

namespace odeframe {

int TorsionTable::pair_index(int p, int q) const {
  if (p < 0 || q <= p || q > k) throw jet_error("torsion table pair out of range");
  for (std::size_t idx = 0; idx < pairs.size(); ++idx)
    if (pairs[idx][0] == p && pairs[idx][1] == q) return static_cast<int>(idx);
  throw jet_error("torsion table pair out of range");
}

Jet TorsionTable::t(int p, int q, int r) const {
  if (p == q) throw jet_error("torsion table pair out of range");
  if (p < q) return coeffs[pair_index(p, q)][1 + r];
  return -coeffs[pair_index(q, p)][1 + r];
}

const std::vector<Jet>& TorsionTable::all(int p, int q) const { return coeffs[pair_index(p, q)]; }

TorsionTable torsion_table(const CanonicalFrame& fr) {
  const int k = fr.bundle.k;
  FrameExpander lu(fr.frame(), fr.bundle.base_order);
  TorsionTable table;
  table.k = k;
  for (int p = 0; p < k; ++p) {
    for (int q = p + 1; q <= k; ++q) {
      table.pairs.push_back({p, q});
      table.coeffs.push_back(lu.expand(lie_bracket(fr.bv[p], fr.bv[q])));
    }
  }
  return table;
}

const std::vector<Jet>& StructureTable::at(int a, int b) const {
  if (a < 0 || b <= a || b >= n) throw jet_error("structure table pair out of range");
  return c[a][b];
}

StructureTable structure_table(const CanonicalFrame& fr) {
  std::vector<VField> frame = fr.frame();
  FrameExpander lu(frame, fr.bundle.base_order);
  StructureTable table;
  table.n = static_cast<int>(frame.size());
  table.c.assign(table.n, std::vector<std::vector<Jet>>(table.n));
  for (int a = 0; a < table.n; ++a)
    for (int b = a + 1; b < table.n; ++b)
      table.c[a][b] = lu.expand(lie_bracket(frame[a], frame[b]));
  return table;
}

std::vector<Jet> w_coefficients(const CanonicalFrame& fr) {
  const int k = fr.bundle.k;
  FrameExpander lu(fr.frame(), fr.bundle.base_order);
  std::vector<Jet> c = lu.expand(lie_bracket(fr.bx, fr.bv[k]));
  return std::vector<Jet>(c.begin() + 1, c.begin() + k + 2);
}

EquationTypeReport equation_type_test(const TorsionTable& table) {
  EquationTypeReport rep;
  for (std::size_t idx = 0; idx < table.pairs.size(); ++idx) {
    const int p = table.pairs[idx][0];
    const int q = table.pairs[idx][1];
    for (int r = std::max(p, q) + 2; r <= table.k; ++r) {
      const Jet& entry = table.coeffs[idx][1 + r];
      if (!odeframe::is_zero(entry.constant_term())) {
        if (rep.at_point) {
          rep.witness = "T^{" + std::to_string(p) + std::to_string(q) + "}_" + std::to_string(r) +
                        " = " + to_string(entry.constant_term());
        }
        rep.at_point = false;
      }
      if (!entry.is_zero()) rep.as_jets = false;
    }
  }
  return rep;
}

LoweringReport lowering_relations_exact(const CanonicalFrame& fr) {
  const BundleChart& bc = fr.bundle;
  const int k = bc.k;
  const auto& names = bc.chart.names;
  LoweringReport rep;
  for (int i = 0; i <= k; ++i) {
    VField residual = lie_bracket(bc.bf1, fr.bv[i]);
    if (i >= 1) residual = residual - rat(static_cast<long>(i) * (i - 1 - k)) * fr.bv[i - 1];
    LoweringItem item;
    item.i = i;
    item.ok = true;
    for (std::size_t v = 0; v < residual.comp.size(); ++v) {
      if (!residual.comp[v].is_zero()) {
        item.ok = false;
        item.witness = "component " + names[v] + ": " + residual.comp[v].to_string(names);
        break;
      }
    }
    rep.all_ok = rep.all_ok && item.ok;
    rep.items.push_back(std::move(item));
  }
  return rep;
}

namespace {

void add_model_item(ModelCoframeReport& rep, const std::vector<std::string>& names,
                    std::string label, const VField& residual, bool universal) {
  StructuralItem item;
  item.label = std::move(label);
  item.ok = true;
  for (std::size_t v = 0; v < residual.comp.size(); ++v) {
    if (!residual.comp[v].is_zero()) {
      item.ok = false;
      item.witness = "component " + names[v] + ": " + residual.comp[v].to_string(names);
      break;
    }
  }
  rep.all_ok = rep.all_ok && item.ok;
  if (universal) rep.universal_ok = rep.universal_ok && item.ok;
  rep.items.push_back(std::move(item));
}

}  // namespace

ModelCoframeReport model_coframe_residuals(const CanonicalFrame& fr) {
  const BundleChart& bc = fr.bundle;
  const int k = bc.k;
  const auto& names = bc.chart.names;

  VField bh = Rational(2) * bc.bf0 + rat(k) * bc.bg;
  const VField& by = bc.bf1;
  std::vector<VField> bw;
  bw.reserve(k + 1);
  Rational inv_fact(1);
  for (int i = 0; i <= k; ++i) {
    if (i > 0) inv_fact /= i;
    bw.push_back(inv_fact * fr.bv[i]);
  }

  ModelCoframeReport rep;
  add_model_item(rep, names, "[BX,BY]-BH", lie_bracket(fr.bx, by) - bh, true);
  add_model_item(rep, names, "[BH,BX]+2BX", lie_bracket(bh, fr.bx) + Rational(2) * fr.bx, true);
  add_model_item(rep, names, "[BH,BY]-2BY", lie_bracket(bh, by) - Rational(2) * by, true);
  add_model_item(rep, names, "[BG,BX]", lie_bracket(bc.bg, fr.bx), true);
  add_model_item(rep, names, "[BG,BY]", lie_bracket(bc.bg, by), true);
  add_model_item(rep, names, "[BG,BH]", lie_bracket(bc.bg, bh), true);

  for (int i = 0; i <= k; ++i) {
    add_model_item(rep, names, "[BG,BW" + std::to_string(i) + "]-BW" + std::to_string(i),
                   lie_bracket(bc.bg, bw[i]) - bw[i], true);
    add_model_item(rep, names,
                   "[BH,BW" + std::to_string(i) + "]-(k-2i)BW" + std::to_string(i),
                   lie_bracket(bh, bw[i]) - rat(k - 2 * i) * bw[i], true);
    VField lower = (i >= 1) ? rat(-(k - i + 1)) * bw[i - 1] : VField::zero(bc.chart.vars());
    add_model_item(rep, names,
                   "[BY,BW" + std::to_string(i) + "]+(k-i+1)BW" + std::to_string(i - 1),
                   lie_bracket(by, bw[i]) - lower, false);
  }
  for (int i = 0; i < k; ++i) {
    add_model_item(rep, names,
                   "[BX,BW" + std::to_string(i) + "]-(i+1)BW" + std::to_string(i + 1),
                   lie_bracket(fr.bx, bw[i]) - rat(i + 1) * bw[i + 1], true);
  }
  add_model_item(rep, names, "[BX,BW" + std::to_string(k) + "]", lie_bracket(fr.bx, bw[k]),
                 false);
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q <= k; ++q)
      add_model_item(rep, names, "[BW" + std::to_string(p) + ",BW" + std::to_string(q) + "]",
                     lie_bracket(bw[p], bw[q]), false);
  return rep;
}

FlagGrowthReport derived_flag_growth(const CanonicalFrame& fr) {
  const BundleChart& bc = fr.bundle;
  const int k = bc.k;
  FlagGrowthReport rep;

  // Only pointwise ranks are needed, so order-1 truncations suffice for the
  // bracket constant terms.
  auto low = [&](const VField& w) { return w.truncated(std::min(1, w.order())); };
  std::vector<VField> base = {low(fr.bx), low(bc.bg), low(bc.bf0), low(bc.bf1)};

  auto stage_fields = [&](int i) {
    std::vector<VField> fields = base;
    for (int j = 0; j < i; ++j) fields.push_back(low(fr.bv[j]));
    return fields;
  };
  auto constant_rows = [](const std::vector<VField>& fields) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(fields.size());
    for (const auto& w : fields) rows.push_back(w.at_point());
    return rows;
  };

  for (int i = 1; i <= k + 1; ++i) {
    std::vector<VField> cur = stage_fields(i);
    std::vector<std::vector<Rational>> rows = constant_rows(cur);
    int rank = rational_rank(rows);
    rep.ranks.push_back(rank);
    if (rank != 4 + i) rep.ok = false;

    if (i <= k) {
      // Brackets of stage i must lie in the pointwise span of stage i+1.
      std::vector<std::vector<Rational>> next_rows = constant_rows(stage_fields(i + 1));
      int next_rank = rational_rank(next_rows);
      for (std::size_t a = 0; a < cur.size() && rep.ok; ++a) {
        for (std::size_t b = a + 1; b < cur.size() && rep.ok; ++b) {
          std::vector<std::vector<Rational>> probe = next_rows;
          probe.push_back(lie_bracket(cur[a], cur[b]).at_point());
          if (rational_rank(probe) != next_rank) rep.ok = false;
        }
      }
    }
  }
  return rep;
}

std::map<std::pair<int, int>, Rational> mixing_constants(const CanonicalFrame& fr) {
  const BundleChart& bc = fr.bundle;
  const Chart& ch = bc.chart;
  const int k = bc.k;
  std::map<std::pair<int, int>, Rational> out;
  if (!odeframe::is_zero(ch.point[ch.f1_index()])) return out;

  // Mixed frame: BX, the lifted reference chain ad^j = ad^j_X(V), BG, BF0,
  // BF1. The coefficient of BV^i on ad^j is m[i][j]·G·F1^{i−j}/F0^i modulo
  // higher corrections, so at F1 = 0 the pure ΔF1^{i−j} monomial isolates it.
  std::vector<VField> mixed;
  mixed.reserve(k + 5);
  mixed.push_back(fr.bx);
  VField ad = bc.v_ref;
  mixed.push_back(ad);
  for (int j = 1; j <= k; ++j) {
    ad = lie_bracket(bc.x_ref, ad);
    mixed.push_back(ad);
  }
  mixed.push_back(bc.bg);
  mixed.push_back(bc.bf0);
  mixed.push_back(bc.bf1);
  FrameExpander lu(mixed, bc.base_order);

  const Rational f0v = ch.point[ch.f0_index()];
  const Rational gv = ch.point[ch.g_index()];
  for (int i = 1; i <= k; ++i) {
    std::vector<Jet> c = lu.expand(fr.bv[i]);
    for (int j = 0; j < i; ++j) {
      Monomial probe;
      probe.set_exponent_raw(ch.f1_index(), i - j);
      probe.hi += std::uint64_t(i - j) << 56;
      const Jet& cj = c[1 + j];
      if (cj.order() < i - j) throw insufficient_order_error("mixing-constant extraction");
      out[{i, j}] = cj.coeff(probe) * pow_rational(f0v, i) / gv;
    }
  }
  return out;
}

FlatnessEvidence flatness_at_point(const CanonicalFrame& fr, const TorsionTable& table) {
  FlatnessEvidence ev;
  auto check = [&](const Jet& j, const std::string& label) {
    if (!ev.flat_here) return;
    if (j.order() < 1) throw insufficient_order_error("flatness needs first-order jets");
    if (!j.truncated(1).is_zero()) {
      ev.flat_here = false;
      ev.witness = label + " = " + j.truncated(1).to_string(fr.bundle.chart.names);
    }
  };
  const int k = table.k;
  for (std::size_t idx = 0; idx < table.pairs.size(); ++idx) {
    const int p = table.pairs[idx][0];
    const int q = table.pairs[idx][1];
    const std::string pq = std::to_string(p) + "," + std::to_string(q);
    for (std::size_t e = 0; e < table.coeffs[idx].size(); ++e)
      check(table.coeffs[idx][e], "bracket[BV" + pq + "] entry " + std::to_string(e));
  }
  FrameExpander lu(fr.frame(), fr.bundle.base_order);
  std::vector<Jet> wc = lu.expand(lie_bracket(fr.bx, fr.bv[k]));
  for (std::size_t e = 0; e < wc.size(); ++e)
    check(wc[e], "bracket[BX,BV" + std::to_string(k) + "] entry " + std::to_string(e));
  return ev;
}

}  // namespace odeframe
