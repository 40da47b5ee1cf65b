#pragma once

#include "siegel/arith.hpp"
#include "siegel/grouptheory.hpp"
#include "siegel/numeric.hpp"

#include <vector>

namespace siegel {

struct StratumRef {
  int r = 0;
  Int classIndex = 0;
  Int n = 0;
};

/// Number of boundary strata of parabolic index r:
/// |GSp_2d(Z/n)| / (|GSp_2r(Z/n)| · n^{dim N_r} · integral_image_order(d−r, n)).
BigInt strata_count(const GroupContext& ctx, int r);

/// Same closed form for arbitrary d >= 1, 0 <= r < d and n >= 1.
BigInt strata_count_formula(int d, int r, Int n);

/// card(I_S) = integral_image_order(d−r) / (n^{dim N_{ℓ,S}} · ∏ integral_image_order(n_i)).
BigInt double_coset_count(const GroupContext& ctx, int r, const ParabolicSet& S);

/// (c_0, ..., c_d)
std::vector<Int> stratum_dims(int d);

struct IcProfiles {
  std::vector<Threshold> t;  // t_r = 1 + c_{d−r} − c_0
  std::vector<Threshold> s;  // s_r = c_{d−r} − c_0
};
IcProfiles ic_profiles(int d);

/// Number of values taken by the similitude factor on GSp_2d(Z/n), i.e.
/// |GSp_2d(Z/n)| / |Sp_2d(Z/n)|.
BigInt similitude_image_count(int d, Int n);

// Brute-force oracles. All enumerate inside explicit matrix groups and throw
// ScopeError when a group exceeds opts.cap.

/// Right cosets of the image of P_r(Z)·Q_r(Ẑ) in GSp_2d(Z/n).
Int brute_force_strata_count(int d, int r, Int n, const EnumerationOptions& opts = {});

/// Cosets of the image of P_{ℓ,S}(Z) in the image of GL_{d−r}(Z) in GL_{d−r}(Z/n).
Int brute_force_double_coset_count(int d, const ParabolicSet& S, Int n, const EnumerationOptions& opts = {});

/// For each coset of H_r = image of P_r(Z)Q_r(Ẑ) in GSp_2d(Z/n), the number of
/// cosets of H_S = image of P_S(Z)Q_r(Ẑ) it contains (in coset order).
std::vector<Int> brute_force_refined_fibers(int d, const ParabolicSet& S, Int n, const EnumerationOptions& opts = {});

/// Distinct similitude factors of the elements of GSp_2d(Z/n).
Int brute_force_similitude_image(int d, Int n, const EnumerationOptions& opts = {});

}  // namespace siegel
