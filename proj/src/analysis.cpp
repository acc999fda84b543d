#include "odeframe/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <sstream>
#include <thread>

namespace odeframe {

int internal_order(int k, int user_order) {
  // Consumption trace through the pipeline: the rescaling chain costs 2k-1
  // orders, the frame chain k, the mixed-frame probes another k, and the
  // torsion/flatness stages a bounded remainder.  Measured minimum across
  // k = 3..5 with generic right-hand sides is 5k+1; this padding places the
  // default request (2k+8) two orders above that floor.
  return user_order + std::max(3, 3 * k - 5);
}

PointAnalysis analyze_at(const ProblemSpec& p, const std::vector<Rational>& base_point,
                         const std::array<Rational, 3>& fiber, const NormalizeOptions& gauge,
                         int user_order) {
  const int b = internal_order(p.k, user_order);
  Chart chart = make_base_chart(p.k, base_point);
  VField xf = equation_field(chart, *p.rhs, b);
  VField v0 = vertical_field(chart);

  PointAnalysis pa;
  pa.regularity = regularity_check(xf, v0, p.k);
  if (!pa.regularity.regular)
    throw consistency_error("equation pair fails the rank profile that holds for every ODE");
  pa.ref = normalize_pair(chart, xf, v0, p.k, b, gauge);
  BundleChart bc = make_bundle_chart(pa.ref, fiber[0], fiber[1], fiber[2], b);
  pa.frame = solve_normalization(bc);
  pa.table = torsion_table(pa.frame);
  pa.w = w_coefficients(pa.frame);
  return pa;
}

std::vector<std::vector<Rational>> flatness_sample_points(const ProblemSpec& p,
                                                          std::uint64_t seed, int count) {
  std::vector<std::vector<Rational>> pts;
  pts.push_back(p.base_point);

  // Coordinates feeding exp/log/sin/cos/sqrt stay put: the series-domain
  // restrictions tie their admissible values to the base point.
  std::vector<bool> frozen(p.k + 2, false);
  frozen[0] = p.rhs->variable_under_function(-1);
  for (int i = 0; i <= p.k; ++i) frozen[1 + i] = p.rhs->variable_under_function(i);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-8, 8);
  const int dens[] = {1, 2, 3, 4, 5, 7};
  std::uniform_int_distribution<int> den(0, 5);

  int attempts = 0;
  while (static_cast<int>(pts.size()) < count) {
    if (++attempts > 100 * count)
      throw input_error("could not sample admissible flatness points; the right-hand side looks "
                        "singular near the base point");
    std::vector<Rational> cand = p.base_point;
    for (int v = 0; v < p.k + 2; ++v)
      if (!frozen[v]) cand[v] = rat(num(rng), dens[den(rng)]);
    try {
      (void)p.rhs->evaluate(cand);
    } catch (const std::exception&) {
      continue;  // singular point of F; draw again
    }
    if (std::find(pts.begin(), pts.end(), cand) != pts.end()) continue;
    pts.push_back(cand);
  }
  return pts;
}

namespace {

void corrupt_adapted_frame(CanonicalFrame& fr) {
  const Chart& ch = fr.bundle.chart;
  Jet one = Jet::constant(ch.vars(), fr.bundle.base_order, Rational(1));
  fr.bv[0] = fr.bv[0] + one * fr.bx;
  for (int i = 1; i <= fr.bundle.k; ++i) fr.bv[i] = lie_bracket(fr.bx, fr.bv[i - 1]);
}

}  // namespace

AnalysisResult run_analysis(const ProblemSpec& p, const AnalysisOptions& opts) {
  AnalysisResult r;
  r.order_user = opts.order_override.value_or(p.order);
  r.order_internal = internal_order(p.k, r.order_user);
  r.seed = opts.seed_override.value_or(p.seed);

  r.main = analyze_at(p, p.base_point, p.fiber, NormalizeOptions{}, r.order_user);
  if (opts.corrupt_frame) {
    corrupt_adapted_frame(r.main.frame);
    r.main.table = torsion_table(r.main.frame);
    r.main.w = w_coefficients(r.main.frame);
  }

  r.wunschmann = wunschmann_residuals(r.main.ref);
  r.wunschmann_jets = std::all_of(r.wunschmann.residuals.begin(), r.wunschmann.residuals.end(),
                                  [](const Jet& j) { return j.is_zero(); });
  r.structural = verify_structural(r.main.frame);
  r.etype = equation_type_test(r.main.table);
  r.lowering = lowering_relations_exact(r.main.frame);
  r.model = model_coframe_residuals(r.main.frame);
  r.flag = derived_flag_growth(r.main.frame);
  r.mixing = mixing_constants(r.main.frame);

  // Flatness: first-order vanishing of all structure obstructions, at the
  // base point and at sampled independent points.
  std::vector<std::vector<Rational>> pts = flatness_sample_points(p, r.seed, p.samples);
  r.flatness.points = pts;
  const int extra = static_cast<int>(pts.size()) - 1;
  std::vector<FlatnessEvidence> evidence(pts.size());
  evidence[0] = flatness_at_point(r.main.frame, r.main.table);

  std::vector<std::exception_ptr> errors(extra);
  auto run_sample = [&](int idx) {
    try {
      PointAnalysis pa = analyze_at(p, pts[1 + idx], p.fiber, NormalizeOptions{}, r.order_user);
      evidence[1 + idx] = flatness_at_point(pa.frame, pa.table);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  };
  const int threads = std::max(1, opts.threads);
  if (threads <= 1 || extra <= 1) {
    for (int i = 0; i < extra; ++i) run_sample(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int workers = std::min(threads, extra);
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < extra; i = next.fetch_add(1)) run_sample(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  r.flatness.flat = true;
  for (std::size_t i = 0; i < evidence.size(); ++i) {
    if (!evidence[i].flat_here) {
      r.flatness.flat = false;
      r.flatness.witness = "point " + std::to_string(i) + ": " + evidence[i].witness;
      break;
    }
  }
  return r;
}

namespace {

std::string point_to_string(const std::vector<Rational>& pt, int k) {
  std::ostringstream out;
  out << "t=" << to_string(pt[0]);
  for (int i = 0; i <= k; ++i) out << " x" << i << "=" << to_string(pt[1 + i]);
  return out.str();
}

std::string profile_to_string(const std::vector<int>& ranks) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ranks.size(); ++i) out << (i ? " " : "") << ranks[i];
  return out.str();
}

}  // namespace

Report render_report(const ProblemSpec& p, const AnalysisResult& r, bool full_jets) {
  Report rep;
  const auto& names = r.main.frame.bundle.chart.names;
  rep.add("report.schema", std::string("odeframe/1"));

  rep.add("problem.k", static_cast<long>(p.k));
  rep.add("problem.rhs", p.rhs_text);
  rep.add("problem.point.t", to_string(p.base_point[0]));
  for (int i = 0; i <= p.k; ++i)
    rep.add("problem.point.x" + std::to_string(i), to_string(p.base_point[1 + i]));
  rep.add("problem.fiber.F0", to_string(p.fiber[0]));
  rep.add("problem.fiber.F1", to_string(p.fiber[1]));
  rep.add("problem.fiber.G", to_string(p.fiber[2]));
  rep.add("problem.samples", static_cast<long>(p.samples));
  rep.add("analysis.order.user", static_cast<long>(r.order_user));
  rep.add("analysis.order.internal", static_cast<long>(r.order_internal));
  rep.add("analysis.seed", std::to_string(r.seed));

  rep.add("regularity", r.main.regularity.regular);
  rep.add("regularity.profile", profile_to_string(r.main.regularity.profile));

  rep.add("wunschmann", r.wunschmann.satisfied);
  rep.add("wunschmann.jets", r.wunschmann_jets);
  for (std::size_t i = 0; i < r.wunschmann.residuals.size(); ++i) {
    const Jet& a = r.wunschmann.residuals[i];
    rep.add("wunschmann.residual.a" + std::to_string(i), to_string(a.constant_term()));
    if (full_jets)
      rep.add("wunschmann.residual.a" + std::to_string(i) + ".jet", a.to_string(names));
  }

  const CanonicalFrame& fr = r.main.frame;
  rep.add("frame.alpha", to_string(fr.alpha.constant_term()));
  rep.add("frame.beta", to_string(fr.beta.constant_term()));
  rep.add("frame.gamma0", to_string(fr.gamma0.constant_term()));
  rep.add("frame.gamma1", to_string(fr.gamma1.constant_term()));
  rep.add("frame.ctilde", to_string(fr.ctilde.constant_term()));

  const char* extra_names[] = {"BX", "BG", "BF0", "BF1"};
  for (std::size_t idx = 0; idx < r.main.table.pairs.size(); ++idx) {
    const int pp = r.main.table.pairs[idx][0];
    const int q = r.main.table.pairs[idx][1];
    const std::string stem =
        "torsion.T" + std::to_string(pp) + std::to_string(q) + ".";
    const auto& c = r.main.table.coeffs[idx];
    for (int rr = 0; rr <= r.main.table.k; ++rr) {
      rep.add(stem + std::to_string(rr), to_string(c[1 + rr].constant_term()));
      if (full_jets) rep.add(stem + std::to_string(rr) + ".jet", c[1 + rr].to_string(names));
    }
    const int n = static_cast<int>(c.size());
    const int extras[] = {0, n - 3, n - 2, n - 1};
    for (int e = 0; e < 4; ++e) {
      rep.add(stem + extra_names[e], to_string(c[extras[e]].constant_term()));
      if (full_jets) rep.add(stem + extra_names[e] + ".jet", c[extras[e]].to_string(names));
    }
  }

  for (std::size_t i = 0; i < r.main.w.size(); ++i) {
    rep.add("w." + std::to_string(i), to_string(r.main.w[i].constant_term()));
    if (full_jets) rep.add("w." + std::to_string(i) + ".jet", r.main.w[i].to_string(names));
  }

  rep.add("structural.ok", r.structural.all_ok);
  for (const auto& item : r.structural.items)
    rep.add("structural." + item.label, item.ok ? "ok" : "FAIL: " + item.witness);

  rep.add("equation_type", r.etype.at_point);
  rep.add("equation_type.jets", r.etype.as_jets);
  if (!r.etype.at_point) rep.add("equation_type.witness", r.etype.witness);

  rep.add("lowering.ok", r.lowering.all_ok);
  for (const auto& item : r.lowering.items)
    rep.add("lowering." + std::to_string(item.i), item.ok ? "ok" : "FAIL: " + item.witness);

  rep.add("model.universal", r.model.universal_ok);
  rep.add("model.complete", r.model.all_ok);
  for (const auto& item : r.model.items)
    rep.add("model." + item.label, item.ok ? "ok" : "FAIL: " + item.witness);

  rep.add("flag.ok", r.flag.ok);
  rep.add("flag.ranks", profile_to_string(r.flag.ranks));

  for (const auto& [ij, value] : r.mixing)
    rep.add("mixing.c" + std::to_string(ij.first) + "_" + std::to_string(ij.second),
            to_string(value));

  rep.add("flat", r.flatness.flat);
  if (!r.flatness.flat) rep.add("flat.witness", r.flatness.witness);
  rep.add("flat.points", static_cast<long>(r.flatness.points.size()));
  for (std::size_t i = 0; i < r.flatness.points.size(); ++i)
    rep.add("flat.point." + std::to_string(i), point_to_string(r.flatness.points[i], p.k));
  return rep;
}

}  // namespace odeframe
