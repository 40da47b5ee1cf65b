#include "siegel/kostant.hpp"

#include "siegel/errors.hpp"

namespace siegel {

GradedVirtualRep lie_n_cohomology(const GroupContext& ctx, const ParabolicSet& S, const Weight& lambda) {
  const GradedWeight single{0, lambda, 1};
  return lie_n_cohomology(ctx, S, std::span<const GradedWeight>(&single, 1));
}

GradedVirtualRep lie_n_cohomology(const GroupContext& ctx, const ParabolicSet& S,
                                  std::span<const GradedWeight> V) {
  for (const auto& v : V) {
    if (v.highest.rank() != ctx.d) throw ValidationError("highest weight rank does not match genus");
    if (!is_dominant(v.highest))
      throw ValidationError("highest weight " + v.highest.to_string() + " is not dominant");
  }
  const auto reps = kostant_reps(ctx, S);
  GradedVirtualRep out(S);
  for (const auto& v : V)
    for (const auto& w : reps) out.add(v.degree + w.length, dot_action(w, v.highest, ctx.rho), v.mult);
  return out;
}

}  // namespace siegel
