#pragma once

#include "siegel/grouptheory.hpp"
#include "siegel/kostant.hpp"
#include "siegel/reps.hpp"
#include "siegel/strata.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace siegel {

using Profile = std::vector<Threshold>;  // indexed by parabolic index s

struct Term {
  BigInt coefficient;
  GradedVirtualRep module;
};

/// Integer combination of terms coefficient · RΓ(Γ_S, module).
///
/// The canonical form keeps one term per S: all modules of the same S are
/// summed with their coefficients, then the content (gcd of multiplicities)
/// is moved into the coefficient, with the sign chosen so that the first
/// summand has positive multiplicity. Two classes are equal exactly when
/// their canonical forms are.
class SymbolicClass {
public:
  SymbolicClass() = default;
  void add(const BigInt& coefficient, const GradedVirtualRep& module);
  void add(const SymbolicClass& other, const BigInt& scale = 1);
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  friend bool operator==(const SymbolicClass& x, const SymbolicClass& y);

private:
  void canonicalize();
  std::vector<Term> terms_;  // sorted by S
};

struct ChainLink {
  int r = 0;
  Threshold a;
};

/// Strata indices r_1 > ... > r_c with thresholds a_1, ..., a_c.
class Chain {
public:
  Chain() = default;
  /// Throws ValidationError unless the indices strictly decrease.
  explicit Chain(std::vector<ChainLink> links);
  const std::vector<ChainLink>& links() const { return links_; }
  bool empty() const { return links_.empty(); }
  /// t_i = −a_i + r_i(r_i+1)/2
  Threshold threshold(std::size_t i) const;
  /// Parses "r:a,r:a,..." ("" is the empty chain).
  static Chain parse(const std::string& text);
  std::string to_string() const;

private:
  std::vector<ChainLink> links_;
};

/// Single term card(I_S) · [RΓ(Lie N_S, V)_{<t_1, ..., <t_c}], S = chain ∪ {r}.
SymbolicClass chain_term(const GroupContext& ctx, const Chain& chain, int r, const Weight& lambda);

/// Common central weight m of a pure V; ValidationError if V is not pure.
Int purity_weight(std::span<const GradedWeight> V);

/// Σ_{r ∈ S ⊆ {r..d−1}} (−1)^{|S|−1} card(I_S) [RΓ(Lie N_S, V)_{>=t_r, <t_s (s ∈ S∖{r})}]
///
/// V must be pure of weight m. Profile thresholds are relative to m: the
/// S_s-pairings are compared with t_s + m, matching W^{>=t}V =
/// w_{<=(−m+c_0, −m+a_1, ...)} Rj_* F V. For m = 0 this is the literal rule.
SymbolicClass restrict_weighted(const GroupContext& ctx, const Profile& profile, const Weight& lambda, int r);
SymbolicClass restrict_weighted(const GroupContext& ctx, const Profile& profile, std::span<const GradedWeight> V,
                                int r);

/// Restrictions of the weighted complexes for the two IC profiles (t, s).
std::pair<SymbolicClass, SymbolicClass> restrict_ic(const GroupContext& ctx, const Weight& lambda, int r);

struct ExpansionTerm {
  std::vector<int> chain;  // n_1 < ... < n_k in {1..n}
  int sign = 1;
};
/// All 2^n subsets of {1..n}, ordered by size then lexicographically.
std::vector<ExpansionTerm> expansion_terms(int n);

/// restrict_weighted rebuilt from chain terms: every subset T of {r..d−1}
/// (an expansion term read through k ↦ d − k) contributes
/// (−1)^{|T|} chain_term(T, r) with a_s = −(t_s + m) + s(s+1)/2, m the
/// central weight of λ,
/// using [w_{>=t} X] = [X] − [w_{<t} X] at the stratum's own index.
SymbolicClass assemble_from_chains(const GroupContext& ctx, const Profile& profile, const Weight& lambda, int r);

/// EXTENSION (an additive invariant, not a formula of the source material):
/// Σ coefficient · ∏ e(Γ(n) ⊂ SL_{n_i}) · Σ (−1)^deg · mult · dim.
ExactRational euler_evaluate(const SymbolicClass& cls, const GroupContext& ctx);

struct ReportRow {
  std::string S;
  int degree = 0;
  std::string weight;
  BigInt mult;
  Int centralWeight = 0;
  Int sheafWeight = 0;
  std::vector<std::pair<int, Int>> pairings;
};
/// One row per (term, summand), multiplicity = coefficient · summand mult.
std::vector<ReportRow> graded_report(const SymbolicClass& cls);

/// Thresholds for "--profile": exactly d entries.
Profile parse_profile(const std::string& text, int d);

}  // namespace siegel
