#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace odeframe {

/// Exponent multi-index packed into 128 bits: one byte per variable
/// (vars 0..7 in `lo`, vars 8..14 in the low bytes of `hi`) and the total
/// degree in the top byte of `hi`. Comparing (hi, lo) lexicographically
/// therefore orders monomials by total degree first, which is what the
/// truncation-aware loops rely on.
///
/// Capacity: at most 15 variables, every exponent and the total degree
/// at most 127. Jet construction enforces both bounds, so monomial
/// products never carry between bytes.
struct Monomial {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  static constexpr int kMaxVars = 15;
  static constexpr int kMaxDegree = 127;

  static Monomial one() { return {}; }

  static Monomial unit(int var) {
    Monomial m;
    m.set_exponent_raw(var, 1);
    m.hi += (std::uint64_t{1} << 56);
    return m;
  }

  int degree() const { return static_cast<int>(hi >> 56); }

  int exponent(int var) const {
    if (var < 8) return static_cast<int>((lo >> (8 * var)) & 0xff);
    return static_cast<int>((hi >> (8 * (var - 8))) & 0xff);
  }

  void set_exponent_raw(int var, int e) {
    if (var < 0 || var >= kMaxVars) throw std::invalid_argument("monomial variable index out of range");
    if (e < 0 || e > kMaxDegree) throw std::invalid_argument("monomial exponent out of range");
    if (var < 8) {
      lo = (lo & ~(std::uint64_t{0xff} << (8 * var))) | (std::uint64_t(e) << (8 * var));
    } else {
      hi = (hi & ~(std::uint64_t{0xff} << (8 * (var - 8)))) | (std::uint64_t(e) << (8 * (var - 8)));
    }
  }

  /// Builds a monomial from an explicit exponent vector.
  static Monomial from_exponents(const std::vector<int>& exps) {
    Monomial m;
    int deg = 0;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      m.set_exponent_raw(static_cast<int>(v), exps[v]);
      deg += exps[v];
    }
    if (deg > kMaxDegree) throw std::invalid_argument("monomial degree out of range");
    m.hi |= (std::uint64_t(deg) << 56);
    return m;
  }

  /// Product of monomials = bytewise sum; valid because jet invariants keep
  /// every byte below 128, so no byte can carry into its neighbour.
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial{a.hi + b.hi, a.lo + b.lo};
  }

  /// Removes one power of `var`; caller guarantees exponent(var) > 0.
  Monomial divided_once(int var) const {
    Monomial m = *this;
    if (var < 8) m.lo -= (std::uint64_t{1} << (8 * var));
    else m.hi -= (std::uint64_t{1} << (8 * (var - 8)));
    m.hi -= (std::uint64_t{1} << 56);
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.hi <=> b.hi; c != 0) return c;
    return a.lo <=> b.lo;
  }
};

/// "t^2 x0", "1" for the empty monomial; names indexed by variable.
std::string to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace odeframe
