#pragma once

#include "siegel/grouptheory.hpp"
#include "siegel/reps.hpp"

#include <span>

namespace siegel {

/// One summand of a formal graded G-module: the irreducible of highest
/// weight `highest` placed in cohomological degree `degree`.
struct GradedWeight {
  int degree = 0;
  Weight highest;
  Int mult = 1;
};

/// [RΓ(Lie N_S, V_λ)] via Kostant: the Levi irreducible of highest weight
/// w·λ in degree ℓ(w), one for each w in W^S.
/// Throws ValidationError if λ is not dominant.
GradedVirtualRep lie_n_cohomology(const GroupContext& ctx, const ParabolicSet& S, const Weight& lambda);

/// Linear extension to a graded sum of irreducibles; total degree is the
/// internal degree plus ℓ(w).
GradedVirtualRep lie_n_cohomology(const GroupContext& ctx, const ParabolicSet& S,
                                  std::span<const GradedWeight> V);

}  // namespace siegel
