#pragma once

#include "siegel/grouptheory.hpp"
#include "siegel/numeric.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace siegel {

/// Σ a_i + 2·m0: the exponent by which the centre λ·I acts (c(λ·I) = λ²).
Int central_weight(const Weight& mu);

/// Pairing with the cocharacter of S_s: t_i = λ² for i <= d − s, t_i = λ
/// otherwise, c = λ². Throws ValidationError for s outside {0..d−1}.
Int torus_pairing(const Weight& mu, int s, int d);

/// w(λ + ρ) − ρ
Weight dot_action(const WeylElt& w, const Weight& lambda, const Weight& rho);

/// a_1 >= ... >= a_d >= 0 (the similitude exponent is unconstrained).
bool is_dominant(const Weight& lambda);

/// A weight split into GL blocks followed by the GSp_2r block.
struct LeviWeight {
  LeviShape shape;
  std::vector<std::vector<Int>> glParts;
  std::vector<Int> sympPart;
  Int m0 = 0;

  /// "[a,b|c|e,f;m0]" with the GSp block after the last '|'.
  std::string to_string() const;
};

LeviWeight to_levi_weight(const LeviShape& shape, const Weight& mu);

/// GL parts weakly decreasing; GSp part weakly decreasing and >= 0.
bool is_levi_dominant(const LeviWeight& mu);

/// Product of the Weyl dimension formulas of the blocks.
/// Throws ValidationError on a non-dominant weight.
BigInt weyl_dim(const LeviWeight& mu);

struct Summand {
  int degree = 0;
  Weight weight;  // Levi highest weight
  Int mult = 0;

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Graded virtual representation of L_S: finitely many (degree, irreducible)
/// pairs with non-zero integer multiplicities, kept sorted by (degree, weight).
class GradedVirtualRep {
public:
  explicit GradedVirtualRep(ParabolicSet S);

  const ParabolicSet& parabolic() const { return S_; }
  const LeviShape& shape() const { return shape_; }
  const std::vector<Summand>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }
  std::size_t size() const { return summands_.size(); }

  /// Adds mult copies; merges with an existing entry and drops zeros.
  void add(int degree, const Weight& weight, Int mult);
  void add(const GradedVirtualRep& other, Int scale = 1);

  /// S_s-pairings of a summand for every s in S, in increasing s.
  std::vector<std::pair<int, Int>> pairings(const Summand& summand) const;

  friend bool operator==(const GradedVirtualRep& x, const GradedVirtualRep& y) {
    return x.S_ == y.S_ && x.summands_ == y.summands_;
  }

private:
  ParabolicSet S_;
  LeviShape shape_;
  std::vector<Summand> summands_;
};

enum class TruncMode { Below, AtLeast };

struct TruncationCondition {
  int s = 0;
  Threshold bound;
  TruncMode mode = TruncMode::Below;
};

/// Keeps the summands whose S_s-pairing satisfies every condition. S_s is
/// central in L_S, so the highest weight's pairing decides the whole
/// irreducible.
GradedVirtualRep truncate(const GradedVirtualRep& module, std::span<const TruncationCondition> conds);

struct WeightedRep {
  Weight highest;
  Int mult = 1;

  friend bool operator==(const WeightedRep&, const WeightedRep&) = default;
};

/// (w_{<t} V, w_{>=t} V) by central weight of the highest weights.
std::pair<std::vector<WeightedRep>, std::vector<WeightedRep>> global_weight_split(
    std::span<const WeightedRep> V, Threshold t);

}  // namespace siegel
