#include "siegel/strata.hpp"

#include "siegel/errors.hpp"
#include "siegel/matrix_model.hpp"

#include <set>

namespace siegel {

namespace {

Int dim_n_maximal(int d, int r) { return Int(d - r) * (d - r + 1) / 2 + Int(2) * r * (d - r); }

// dim of the unipotent radical of the block parabolic of GL_k with these blocks
Int block_unipotent_dim(const std::vector<int>& blocks) {
  Int dim = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) dim += Int(blocks[i]) * blocks[j];
  return dim;
}

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (b == 0 || a % b != 0) throw ValidationError(std::string(what) + ": closed form does not divide exactly");
  return a / b;
}

}  // namespace

BigInt strata_count_formula(int d, int r, Int n) {
  if (d < 1) throw ValidationError("genus must be >= 1");
  if (r < 0 || r >= d) throw ValidationError("parabolic index out of range");
  if (n < 1) throw ValidationError("level must be >= 1");
  const BigInt total = detail::group_order_any(GroupKind::gsp(d), n);
  const BigInt denom = detail::group_order_any(GroupKind::gsp(r), n) *
                       ipow(BigInt(n), static_cast<unsigned>(dim_n_maximal(d, r))) * integral_image_order(d - r, n);
  return exact_div(total, denom, "strata_count");
}

BigInt strata_count(const GroupContext& ctx, int r) {
  if (r < 0 || r >= ctx.d) throw ValidationError("parabolic index out of range");
  return strata_count_formula(ctx.d, r, ctx.n);
}

BigInt double_coset_count(const GroupContext& ctx, int r, const ParabolicSet& S) {
  if (S.d() != ctx.d) throw ValidationError("parabolic set has the wrong genus");
  if (S.r() != r) throw ValidationError("min(S) must equal the stratum index r");
  const LeviShape shape = levi_shape(S);
  BigInt denom = ipow(BigInt(ctx.n), static_cast<unsigned>(block_unipotent_dim(shape.glBlocks)));
  for (int b : shape.glBlocks) denom *= integral_image_order(b, ctx.n);
  return exact_div(integral_image_order(ctx.d - r, ctx.n), denom, "double_coset_count");
}

std::vector<Int> stratum_dims(int d) {
  if (d < 0) throw ValidationError("genus must be >= 0");
  std::vector<Int> c;
  for (int r = 0; r <= d; ++r) c.push_back(Int(d - r) * (d + 1 - r) / 2);
  return c;
}

IcProfiles ic_profiles(int d) {
  if (d < 1) throw ValidationError("genus must be >= 1");
  const auto c = stratum_dims(d);
  IcProfiles p;
  for (int r = 0; r < d; ++r) {
    const Int s = c[static_cast<std::size_t>(d - r)] - c[0];
    p.t.push_back(Threshold::finite(1 + s));
    p.s.push_back(Threshold::finite(s));
  }
  return p;
}

BigInt similitude_image_count(int d, Int n) {
  return group_order(GroupKind::gsp(d), n) / group_order(GroupKind::sp(d), n);
}

Int brute_force_strata_count(int d, int r, Int n, const EnumerationOptions& opts) {
  const GroupContext ctx = build_context(d, n);
  const auto G = brute_force_group(GroupKind::gsp(d), n, opts);
  const auto H = subgroup_closure(parabolic_image_generators(ctx, ParabolicSet::maximal(d, r), n), opts.cap);
  return static_cast<Int>(right_cosets(G, H).count());
}

Int brute_force_double_coset_count(int d, const ParabolicSet& S, Int n, const EnumerationOptions& opts) {
  const int k = d - S.r();
  if (k == 0) return 1;
  const auto X = subgroup_closure(block_parabolic_generators({k}, n), opts.cap);
  const auto Y = subgroup_closure(block_parabolic_generators(levi_shape(S).glBlocks, n), opts.cap);
  return static_cast<Int>(right_cosets(X, Y).count());
}

std::vector<Int> brute_force_refined_fibers(int d, const ParabolicSet& S, Int n, const EnumerationOptions& opts) {
  const GroupContext ctx = build_context(d, n);
  const auto G = brute_force_group(GroupKind::gsp(d), n, opts);
  const auto Hr = subgroup_closure(parabolic_image_generators(ctx, ParabolicSet::maximal(d, S.r()), n), opts.cap);
  const auto HS = subgroup_closure(parabolic_image_generators(ctx, S, n), opts.cap);
  const auto coarse = right_cosets(G, Hr);
  const auto fine = right_cosets(G, HS);
  std::vector<std::set<std::size_t>> inside(coarse.count());
  for (std::size_t i = 0; i < G.size(); ++i) inside[coarse.classOf[i]].insert(fine.classOf[i]);
  std::vector<Int> fibers;
  for (const auto& s : inside) fibers.push_back(static_cast<Int>(s.size()));
  return fibers;
}

Int brute_force_similitude_image(int d, Int n, const EnumerationOptions& opts) {
  std::set<Int> values;
  for (const auto& g : brute_force_group(GroupKind::gsp(d), n, opts)) {
    const auto c = similitude_factor(g);
    if (!c) throw ValidationError("enumerated element is not a similitude");
    values.insert(*c);
  }
  return static_cast<Int>(values.size());
}

}  // namespace siegel
