#pragma once

// Root datum of GSp_2d in similitude coordinates.
//
// The diagonal torus is diag(t_1, ..., t_d, c/t_d, ..., c/t_1); a character is
// written (a_1, ..., a_d; m0) with e_i dual to t_i and e_0 dual to c. Simple
// roots follow the type C_d ordering α_k = e_k − e_{k+1} (k < d) and
// α_d = 2e_d − e_0. The maximal parabolic P_r (Levi GL_{d−r} × GSp_2r) is the
// one obtained by removing α_{d−r}.

#include "siegel/numeric.hpp"

#include <compare>
#include <string>
#include <vector>

namespace siegel {

struct Weight {
  std::vector<Int> a;
  Int m0 = 0;

  Weight() = default;
  Weight(std::vector<Int> coords, Int similitude) : a(std::move(coords)), m0(similitude) {}
  static Weight zero(int d) { return Weight(std::vector<Int>(static_cast<std::size_t>(d), 0), 0); }
  /// e_i for 1 <= i <= d.
  static Weight unit(int d, int i);
  /// The similitude character e_0.
  static Weight similitude_char(int d) { return Weight(std::vector<Int>(static_cast<std::size_t>(d), 0), 1); }

  int rank() const { return static_cast<int>(a.size()); }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(Int k) const;

  /// "(a_1,...,a_d;m0)"
  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Non-empty sorted subset S of {0, ..., d−1}; P_S is the intersection of the P_s.
class ParabolicSet {
public:
  /// Throws ValidationError on an empty set, duplicates or out-of-range indices.
  static ParabolicSet make(int d, std::vector<int> indices);
  static ParabolicSet maximal(int d, int r) { return make(d, {r}); }

  int d() const { return d_; }
  int r() const { return indices_.front(); }
  int size() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }
  bool contains(int s) const;

  /// "{0,1}"
  std::string to_string() const;

  friend bool operator==(const ParabolicSet&, const ParabolicSet&) = default;
  friend auto operator<=>(const ParabolicSet&, const ParabolicSet&) = default;

private:
  ParabolicSet(int d, std::vector<int> idx) : d_(d), indices_(std::move(idx)) {}
  int d_ = 0;
  std::vector<int> indices_;
};

/// Block structure of the Levi L_S = GL_{n_1} × ... × GL_{n_k} × GSp_2r.
struct LeviShape {
  std::vector<int> glBlocks;
  int sympRank = 0;

  friend bool operator==(const LeviShape&, const LeviShape&) = default;
};

LeviShape levi_shape(const ParabolicSet& S);

/// Signed permutation: coordinate i is sent to perm[i], negated when flips[i].
/// Negating coordinate i is the reflection in 2e_i − e_0, so it also adds a_i
/// to the similitude exponent.
struct WeylElt {
  std::vector<int> perm;
  std::vector<char> flips;
  int length = 0;

  static WeylElt identity(int d);

  int rank() const { return static_cast<int>(perm.size()); }
  Weight apply(const Weight& mu) const;

  friend bool operator==(const WeylElt& x, const WeylElt& y) {
    return x.perm == y.perm && x.flips == y.flips;
  }
  friend auto operator<=>(const WeylElt& x, const WeylElt& y) {
    if (auto c = x.perm <=> y.perm; c != 0) return c;
    return x.flips <=> y.flips;
  }
};

/// Default genus limit for explicit Weyl group storage.
inline constexpr int kDefaultMaxGenus = 6;

struct GroupContext {
  int d = 0;
  Int n = 0;
  std::vector<Weight> positiveRoots;
  std::vector<Weight> simpleRoots;  // simpleRoots[k-1] = α_k
  Weight rho;                       // (d, d−1, ..., 1; 0)
  Int weylOrder = 0;
  Int dimG = 0;
  Int c = 0;
  std::vector<Int> stratumDims;     // c_r = (d−r)(d+1−r)/2, r = 0..d
  std::vector<WeylElt> weyl;        // sorted by (length, perm, flips)
};

/// Throws ValidationError for d < 1 or n < 3, ScopeError for d > maxGenus.
GroupContext build_context(int d, Int n, int maxGenus = kDefaultMaxGenus);

std::vector<Weight> positive_roots(int d);
std::vector<Weight> simple_roots(int d);

/// Coefficients (c_1, ..., c_d) of a root in the simple-root basis.
std::vector<Int> simple_root_coefficients(const Weight& root);
bool is_positive_root(const Weight& root);

/// Number of positive roots sent to negative roots.
int coxeter_length(const WeylElt& w);
WeylElt compose(const WeylElt& x, const WeylElt& y);  // x ∘ y
WeylElt inverse(const WeylElt& w);
/// Simple reflection s_{α_k}, 1 <= k <= d.
WeylElt simple_reflection(int d, int k);

std::vector<WeylElt> weyl_group(int d);

struct ParabolicData {
  ParabolicSet S;
  std::vector<int> leviBlocks;
  int sympRank = 0;
  std::vector<int> leviSimple;  // k such that α_k is a simple root of L_S
  std::vector<Weight> leviRoots;  // positive roots of L_S
  std::vector<Weight> nRoots;
  std::vector<Weight> uRoots;     // roots of Lie U_r, r = min S
  Int dimN = 0;
  Int dimU = 0;
};

ParabolicData parabolic_data(const GroupContext& ctx, const ParabolicSet& S);

/// Minimal length representatives w of W_L \ W, i.e. w^{-1} keeps every
/// simple root of L_S positive. Sorted by (length, perm, flips).
std::vector<WeylElt> kostant_reps(const GroupContext& ctx, const ParabolicSet& S);

/// |W_{L_S}| = (∏ n_i!) · 2^r · r!
Int levi_weyl_order(const LeviShape& shape);

}  // namespace siegel
