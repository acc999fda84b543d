#pragma once

#include <array>
#include <map>

#include "odeframe/frame.hpp"

namespace odeframe {

/// Frame-expansion coefficients of every bracket [BV^p, BV^q], p < q. The
/// coefficient vector follows the frame ordering BX, BV^0..BV^k, BG, BF0,
/// BF1, so entry 1+r is the torsion coefficient on BV^r and the remaining
/// entries are the discarded components kept for completeness.
struct TorsionTable {
  int k = 0;
  std::vector<std::array<int, 2>> pairs;
  std::vector<std::vector<Jet>> coeffs;

  int pair_index(int p, int q) const;
  /// Torsion coefficient on BV^r; antisymmetric in (p, q).
  Jet t(int p, int q, int r) const;
  const std::vector<Jet>& all(int p, int q) const;
};

TorsionTable torsion_table(const CanonicalFrame& fr);

/// Full structure functions of the (k+5)-frame: every pairwise bracket
/// expanded in the frame itself. Ordering as in CanonicalFrame::frame().
struct StructureTable {
  int n = 0;
  std::vector<std::vector<std::vector<Jet>>> c;  ///< c[a][b] valid for a < b
  const std::vector<Jet>& at(int a, int b) const;
};

StructureTable structure_table(const CanonicalFrame& fr);

/// w_0..w_k: the BV-components of [BX, BV^k], the curvature-type functions
/// left free by the structural equations.
std::vector<Jet> w_coefficients(const CanonicalFrame& fr);

/// Vanishing pattern T^{pq}_r = 0 for r > max(p,q) + 1, which characterizes
/// the frames that come from an ODE. Verdict from constant terms; vanishing
/// of the full jets is reported alongside.
struct EquationTypeReport {
  bool at_point = true;
  bool as_jets = true;
  std::string witness;  ///< first entry violating the pointwise pattern
};

EquationTypeReport equation_type_test(const TorsionTable& table);

/// For frames of ODE origin the lowering relations hold exactly, with no
/// modulo-frame slack: [BF1, BV^i] = i(i−1−k)·BV^{i−1}.
struct LoweringItem {
  int i = 0;
  bool ok = false;
  std::string witness;
};

struct LoweringReport {
  std::vector<LoweringItem> items;
  bool all_ok = true;
};

LoweringReport lowering_relations_exact(const CanonicalFrame& fr);

/// Residuals of the flat-model bracket table in the rescaled basis
/// BH = 2·BF0 + k·BG, BY = BF1, BW^i = BV^i/i!:
///   [BX,BY] = BH     [BH,BX] = −2BX      [BH,BY] = 2BY     [BG,BX/BY/BH] = 0
///   [BG,BW^i] = BW^i               [BH,BW^i] = (k−2i)·BW^i
///   [BX,BW^i] = (i+1)·BW^{i+1}     [BY,BW^i] = −(k−i+1)·BW^{i−1}
///   [BW^i,BW^j] = 0
/// The first two lines hold for every input; [BY,BW^i] needs equation type;
/// [BX,BW^k] and [BW^i,BW^j] vanish precisely in the flat case, so their
/// residuals carry the obstruction.
struct ModelCoframeReport {
  std::vector<StructuralItem> items;
  bool all_ok = true;          ///< complete table, flat model only
  bool universal_ok = true;    ///< the rows that hold for every input
};

ModelCoframeReport model_coframe_residuals(const CanonicalFrame& fr);

/// Growth of the iterated-bracket flag of D = span{BV^0, BX, BG, BF0, BF1}:
/// pointwise rank 4+i at stage i, with stage-i brackets landing in stage i+1.
struct FlagGrowthReport {
  std::vector<int> ranks;  ///< stage i = 1..k+1
  bool ok = true;
};

FlagGrowthReport derived_flag_growth(const CanonicalFrame& fr);

/// The mixing constants relating the adapted frame to the naive lifted chain:
/// modulo span{BX, BG, BF0, BF1},
///   BV^i = (G/F0^i)·( ad^i + Σ_{j<i} m[i][j]·F1^{i−j}·ad^j )
/// over the lifted reference chain ad^j = ad^j_X(V). Extracted at fiber
/// points with F1 = 0; the map is empty otherwise.
std::map<std::pair<int, int>, Rational> mixing_constants(const CanonicalFrame& fr);

/// First-order flatness evidence at one expansion point: every torsion
/// coefficient (including the discarded components) and every coefficient of
/// [BX, BV^k] has zero constant term and zero first-order part.
struct FlatnessEvidence {
  bool flat_here = true;
  std::string witness;  ///< first obstructing entry
};

FlatnessEvidence flatness_at_point(const CanonicalFrame& fr, const TorsionTable& table);

}  // namespace odeframe
