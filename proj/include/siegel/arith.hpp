#pragma once

#include "siegel/matrix_model.hpp"
#include "siegel/numeric.hpp"

#include <string>
#include <vector>

namespace siegel {

struct GroupKind {
  enum class Family { GL, SL, Sp, GSp, Unipotent };
  Family family = Family::GL;
  int param = 0;  // k for GL/SL, r for Sp(2r)/GSp(2r), D for Unipotent

  static GroupKind gl(int k) { return {Family::GL, k}; }
  static GroupKind sl(int k) { return {Family::SL, k}; }
  static GroupKind sp(int r) { return {Family::Sp, r}; }
  static GroupKind gsp(int r) { return {Family::GSp, r}; }
  static GroupKind unipotent(int dim) { return {Family::Unipotent, dim}; }

  /// "GL(2)", "Sp(4)", "GSp(4)", "N(3)"
  std::string to_string() const;
  /// Inverse of to_string.
  static GroupKind parse(const std::string& text);

  friend bool operator==(const GroupKind&, const GroupKind&) = default;
};

/// |kind(Z/n)|, multiplicative over the prime powers of n. Needs n >= 2.
BigInt group_order(const GroupKind& kind, Int n);

/// group_order(kind, m) / group_order(kind, n) for n | m, n >= 3.
BigInt congruence_index(const GroupKind& kind, Int n, Int m);

/// Order of the image of GL_k(Z) in GL_k(Z/n): matrices with det ±1.
/// Defined for every n >= 1 (1 for k = 0).
BigInt integral_image_order(int k, Int n);

/// Bernoulli number B_k (B_1 = −1/2).
ExactRational bernoulli(int k);
/// ζ(1 − k) for k >= 2, i.e. −B_k / k.
ExactRational zeta_one_minus(int k);

/// EXTENSION (not a formula from the source material): Euler characteristic
/// of the principal congruence subgroup Γ(n) ⊂ SL_k(Z),
/// |SL_k(Z/n)| · ∏_{i=2}^{k} ζ(1 − i). Needs k >= 1, n >= 3.
ExactRational euler_char_congruence(int k, Int n);

struct EnumerationOptions {
  std::size_t cap = 200000;
  unsigned threads = 1;
};

/// Every element of kind(Z/n), sorted. GSp(0) is represented by the 1×1
/// matrices [c], c a unit; GL(0), SL(0), Sp(0) by the single 0×0 matrix.
/// Unipotent(D) is realised as the (D+1)×(D+1) matrices I + Σ v_i E_{0,i}.
/// Throws ScopeError if the group order exceeds the cap.
std::vector<ModMatrix> brute_force_group(const GroupKind& kind, Int n, const EnumerationOptions& opts = {});

namespace detail {
/// group_order without the n >= 2 guard (n = 1 gives the trivial group).
BigInt group_order_any(const GroupKind& kind, Int n);
}  // namespace detail

}  // namespace siegel
