#pragma once

// Explicit matrices over Z/n: the finite model in which every coset count is
// enumerated by brute force. The symplectic form is
//   Ω = [[0, J_d], [−J_d, 0]],  J_d the antidiagonal identity,
// so that the upper-triangular Borel and the diagonal torus
// diag(t_1, ..., t_d, c/t_d, ..., c/t_1) are the standard ones.

#include "siegel/grouptheory.hpp"
#include "siegel/numeric.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace siegel {

class ModMatrix {
public:
  ModMatrix() = default;
  ModMatrix(int rows, int cols, Int modulus);
  static ModMatrix identity(int k, Int modulus);
  /// Row-major entries, reduced into [0, modulus).
  static ModMatrix from_entries(int rows, int cols, Int modulus, const std::vector<Int>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int modulus() const { return modulus_; }
  const std::vector<Int>& entries() const { return e_; }

  Int operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  void set(int i, int j, Int value);

  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix transpose() const;
  /// Reduction modulo a divisor of the current modulus.
  ModMatrix reduce(Int divisor) const;
  Int determinant() const;
  bool is_identity() const;

  /// Injective base-n code; throws ScopeError if it would not fit in 63 bits.
  std::uint64_t encode() const;

  /// "a,b;c,d" (rows separated by ';').
  std::string to_string() const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
  friend std::strong_ordering operator<=>(const ModMatrix& x, const ModMatrix& y) {
    if (auto c = x.rows_ <=> y.rows_; c != 0) return c;
    if (auto c = x.cols_ <=> y.cols_; c != 0) return c;
    return x.e_ <=> y.e_;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  Int modulus_ = 1;
  std::vector<Int> e_;
};

/// Inverse of a unit mod n; throws ValidationError for non-units.
Int mod_inverse(Int x, Int n);
bool is_unit(Int x, Int n);

ModMatrix symplectic_form(int d, Int n);

/// c with gᵀΩg = cΩ, if g is a similitude of Ω (c need not be a unit).
std::optional<Int> similitude_factor(const ModMatrix& g);

/// Inverse of a symplectic similitude with unit factor: −c⁻¹ Ω gᵀ Ω.
ModMatrix gsp_inverse(const ModMatrix& g);

/// I + X_β for a root β (positive or negative), X_β the root vector of sp_2d
/// in the matrix model. Throws ValidationError if β is not a root.
ModMatrix root_element(int d, const Weight& beta, Int n);

/// diag(t_1, ..., t_d, c/t_d, ..., c/t_1) mod n; the t_i and c must be units.
ModMatrix torus_element(const std::vector<Int>& t, Int c, Int n);

/// Subgroup generated by `generators` (all square of the same size).
/// Throws ScopeError once more than `cap` elements have been produced.
std::vector<ModMatrix> subgroup_closure(const std::vector<ModMatrix>& generators, std::size_t cap);

/// Partition of a group G (sorted) into right cosets H·g of a subgroup H.
struct CosetPartition {
  std::vector<std::size_t> classOf;         // per element of G
  std::vector<std::size_t> representative;  // index into G of the minimal element of each class
  std::size_t count() const { return representative.size(); }
};

CosetPartition right_cosets(const std::vector<ModMatrix>& G, const std::vector<ModMatrix>& H);

/// Index of each matrix of G by its code.
class MatrixIndex {
public:
  explicit MatrixIndex(const std::vector<ModMatrix>& G);
  std::optional<std::size_t> find(const ModMatrix& g) const;

private:
  std::vector<std::pair<std::uint64_t, std::size_t>> sorted_;
};

/// Generators of the image of P_S(Z)·Q_r(Ẑ) in GSp_2d(Z/n), r = min S:
/// root elements of N_S and of the Levi, sign changes in the GL blocks and
/// the similitudes of Q_r.
std::vector<ModMatrix> parabolic_image_generators(const GroupContext& ctx, const ParabolicSet& S, Int n);

/// Generators of the image of P_{ℓ,S}(Z) ⊂ GL_{d−r}(Z) in GL_{d−r}(Z/n):
/// block upper triangular with det ±1 diagonal blocks.
std::vector<ModMatrix> block_parabolic_generators(const std::vector<int>& blocks, Int n);

/// Generators of the image of P_{ℓ,S}(Z)·N_S(Ẑ) in GSp_2d(Z/n) (no G_r part,
/// no similitude); its intersection with the level-n kernel is H_{ℓ,S}.
std::vector<ModMatrix> linear_part_generators(const GroupContext& ctx, const ParabolicSet& S, Int n);

}  // namespace siegel
