#pragma once

#include "siegel/arith.hpp"
#include "siegel/grouptheory.hpp"
#include "siegel/matrix_model.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace siegel {

/// Integral Hecke element: g ∈ GSp_2d(Z/m) between levels n | m.
struct HeckeDatum {
  int d = 0;
  Int n = 0;
  Int m = 0;
  ModMatrix g;
};

/// Throws ValidationError unless n | m, n >= 3, and g is a similitude of
/// GSp_2d(Z/m) with unit factor.
void validate(const HeckeDatum& datum);

/// Parses "--g": "identity" or 2d×2d entries "a,b,...;c,d,...;...". Entries
/// are reduced mod m. Rational or non-integral entries ("1/2") raise ScopeError.
ModMatrix parse_hecke_element(const std::string& text, int d, Int m);

/// [H_{ℓ,S} : H'_{ℓ,S}] = (m/n)^{dim N_S} · ∏ congruence_index(SL(n_i), n, m).
BigInt hecke_index(const GroupContext& ctx, const ParabolicSet& S, Int m);

/// |GSp_2d(Z/m)| / |GSp_2d(Z/n)|
BigInt transfer_degree(int d, Int n, Int m);

/// transfer_degree / hecke_index({r})
BigInt boundary_fiber_count(const GroupContext& ctx, int r, Int m);

struct HeckeCell {
  Int count = 0;
  BigInt coefficient;
  /// Optional witness (h, h1, h2, q1 = hg·h1⁻¹, q2 = h·h2⁻¹) for the first
  /// level-m coset mapping to this cell: h represents C', h1 and h2 the
  /// level-n classes C1 and C2.
  std::string annotation;
};

struct HeckeMatrix {
  Int levelNClasses = 0;
  Int levelMClasses = 0;
  std::map<std::pair<Int, Int>, HeckeCell> cells;  // (C1, C2)
};

/// Classes at level k are the right cosets H̄_S(k)\GSp_2d(Z/k), H̄_S(k) the
/// image of P_S(Z)Q_r(Ẑ). A level-m coset C' = H̄h goes to (C1, C2) with
/// C1 ∋ hg mod n and C2 ∋ h mod n.
HeckeMatrix hecke_matrix_structure(const HeckeDatum& datum, const ParabolicSet& S, bool annotate,
                                   const EnumerationOptions& opts = {});

/// Index of H_{ℓ,S}(m) in H_{ℓ,S}(n), computed as the order of the image of
/// H_{ℓ,S}(n) in GSp_2d(Z/m) (where H_{ℓ,S}(m) becomes trivial).
Int brute_force_hecke_index(int d, const ParabolicSet& S, Int n, Int m, const EnumerationOptions& opts = {});

}  // namespace siegel
