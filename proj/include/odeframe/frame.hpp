#pragma once

#include "odeframe/bundle.hpp"

namespace odeframe {

/// The four torsion coefficients whose vanishing pins down the adapted frame:
/// the BV^0, BV^1, BV^2 components of [BV^0, BV^1] and the BV^3 component of
/// [BV^0, BV^3].
struct TorsionFunctionals {
  Jet t01_0, t01_1, t01_2, t03_3;
  bool all_vanish() const {
    return t01_0.is_zero() && t01_1.is_zero() && t01_2.is_zero() && t03_3.is_zero();
  }
};

/// Shared machinery for evaluating the normalization functionals: the lifted
/// BX, the ansatz-free chain BV^i = ad^i_BX(G·V), and one frame factorization
/// reused by every probe. The BV-components of any bracket are unchanged when
/// the frame's BV^i are shifted inside span{BX, BG, BF0, BF1}, so expanding
/// against this fixed frame measures the same four functionals as the frame
/// being solved for.
class AdaptedFrameContext {
 public:
  explicit AdaptedFrameContext(const BundleChart& bc);

  const BundleChart& bundle() const { return *bc_; }
  const VField& bx() const { return bx_; }
  const std::vector<VField>& chain() const { return chain_; }

  /// BV^0 candidate from functional coefficients, BV^0 = G·V + α·BX + β·BG
  /// + γ0·BF0 + γ1·BF1.
  VField candidate(const Jet& alpha, const Jet& beta, const Jet& gamma0, const Jet& gamma1) const;

  TorsionFunctionals functionals_at(const VField& bv0) const;

 private:
  const BundleChart* bc_;
  VField bx_;
  std::vector<VField> chain_;        ///< ad^i_BX(G·V), i = 0..k
  std::vector<VField> zero_frame_;   ///< BX, chain, BG, BF0, BF1
  FrameExpander lu_;
};

/// The adapted frame: BX, the solved BV^0..BV^k and the fundamental fields,
/// together with the functional coefficients that produced it.
struct CanonicalFrame {
  BundleChart bundle;
  VField bx;
  std::vector<VField> bv;
  Jet alpha, beta, gamma0, gamma1;
  /// Measured coupling of α into the top functional; a nonzero constant can
  /// occur only at k = 3.
  Jet ctilde;

  /// Frame ordering used for every expansion: BX, BV^0..BV^k, BG, BF0, BF1.
  std::vector<VField> frame() const;
};

/// Solves the four normalization conditions for (α, β, γ0, γ1) by probing the
/// affine dependence of the functionals, then verifies that the rebuilt frame
/// annihilates all four identically.
CanonicalFrame solve_normalization(const BundleChart& bc);

struct StructuralItem {
  std::string label;
  bool ok = false;
  std::string witness;  ///< first offending coefficient, empty when ok
};

struct StructuralReport {
  std::vector<StructuralItem> items;
  bool all_ok = true;
};

/// Residuals of the structural identities of the adapted frame:
///   [BG,BX] = 0                  [BF0,BX] = −BX
///   [BF1,BX] = −2BF0 − k·BG      [BG,BV^i] = BV^i
///   [BF0,BV^i] = −i·BV^i
///   [BF1,BV^i] = i(i−1−k)·BV^{i−1} modulo span{BX, BG, BF0, BF1}.
/// All but the last are exact field identities; the lowering relation is
/// checked on the BV-components of the expansion in the adapted frame.
StructuralReport verify_structural(const CanonicalFrame& fr);

}  // namespace odeframe
