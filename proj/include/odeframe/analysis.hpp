#pragma once

#include <optional>

#include "odeframe/fields.hpp"
#include "odeframe/invariants.hpp"
#include "odeframe/problem.hpp"
#include "odeframe/report.hpp"

namespace odeframe {

struct AnalysisOptions {
  std::optional<int> order_override;
  std::optional<std::uint64_t> seed_override;
  bool full_jets = false;   ///< include full torsion jets in the report
  int threads = 1;          ///< parallelism across flatness sample points
  bool corrupt_frame = false;  ///< test hook: damage the frame before verification
};

/// The full pipeline at one (base point, fiber point) choice.
struct PointAnalysis {
  RegularityResult regularity;
  ReferenceFrame ref;
  CanonicalFrame frame;
  TorsionTable table;
  std::vector<Jet> w;
};

/// Internal working order: the pipeline consumes jet orders at every bracket
/// and division, so the requested order is padded to keep the final torsion
/// jets valid to first order and beyond.
int internal_order(int k, int user_order);

PointAnalysis analyze_at(const ProblemSpec& p, const std::vector<Rational>& base_point,
                         const std::array<Rational, 3>& fiber, const NormalizeOptions& gauge,
                         int user_order);

struct FlatnessResult {
  bool flat = false;
  std::string witness;
  std::vector<std::vector<Rational>> points;  ///< base points actually tested
};

struct AnalysisResult {
  int order_user = 0;
  int order_internal = 0;
  std::uint64_t seed = 0;
  PointAnalysis main;
  WunschmannReport wunschmann;
  bool wunschmann_jets = false;
  StructuralReport structural;
  EquationTypeReport etype;
  LoweringReport lowering;
  ModelCoframeReport model;
  FlagGrowthReport flag;
  std::map<std::pair<int, int>, Rational> mixing;
  FlatnessResult flatness;
};

AnalysisResult run_analysis(const ProblemSpec& p, const AnalysisOptions& opts = {});

Report render_report(const ProblemSpec& p, const AnalysisResult& r, bool full_jets);

/// Samples admissible base points for the flatness certificate: the problem's
/// own point first, then seeded small random rationals; coordinates feeding
/// series-domain-restricted functions stay at their base values.
std::vector<std::vector<Rational>> flatness_sample_points(const ProblemSpec& p,
                                                          std::uint64_t seed, int count);

}  // namespace odeframe
