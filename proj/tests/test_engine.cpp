#include "siegel/engine.hpp"
#include "siegel/errors.hpp"

#include <doctest.h>

#include <map>

using namespace siegel;

namespace {

std::vector<Weight> dominant_weights(int d, Int maxEntry) {
  std::vector<Weight> out;
  std::vector<Int> a(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int i, Int bound) -> void {
    if (i == d) {
      out.emplace_back(a, 0);
      return;
    }
    for (Int x = 0; x <= bound; ++x) {
      a[static_cast<std::size_t>(i)] = x;
      self(self, i + 1, x);
    }
  };
  rec(rec, 0, maxEntry);
  return out;
}

// Graded dimension Σ_summands mult · dim by degree.
std::map<int, BigInt> graded_dims(const SymbolicClass& cls) {
  std::map<int, BigInt> out;
  for (const auto& t : cls.terms())
    for (const auto& s : t.module.summands())
      out[s.degree] += t.coefficient * s.mult * weyl_dim(to_levi_weight(t.module.shape(), s.weight));
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Profile constant(int d, Threshold t) { return Profile(static_cast<std::size_t>(d), t); }

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("symbolic class canonical form") {
    const auto S = ParabolicSet::make(1, {0});
    GradedVirtualRep a(S), b(S);
    a.add(0, Weight({1}, 0), 2);
    b.add(0, Weight({1}, 0), 1);
    SymbolicClass x, y;
    x.add(1, a);
    y.add(2, b);
    CHECK(x == y);
    y.add(-2, b);
    CHECK(y.empty());
    SymbolicClass z;
    z.add(0, a);
    CHECK(z.empty());
  }

  TEST_CASE("chain term examples") {
    const auto c1 = build_context(1, 3);
    const auto t = chain_term(c1, Chain{}, 0, Weight::zero(1));
    REQUIRE(t.terms().size() == 1);
    CHECK(t.terms()[0].coefficient == 1);
    CHECK(t.terms()[0].module.size() == 2);
    for (Int k = 0; k <= 3; ++k) {
      // t_1 = 0 at stratum 0: a_1 = 0
      const auto u = chain_term(c1, Chain({{0, Threshold::finite(0)}}), 0, Weight({k}, 0));
      REQUIRE(u.terms().size() == 1);
      REQUIRE(u.terms()[0].module.size() == 1);
      CHECK(u.terms()[0].module.summands()[0].degree == 1);
    }
    const auto c2 = build_context(2, 3);
    // t = +∞ at index 1: a = −∞
    const auto v = chain_term(c2, Chain({{1, Threshold::neg_inf()}}), 0, Weight::zero(2));
    REQUIRE(v.terms().size() == 1);
    CHECK(v.terms()[0].module.parabolic() == ParabolicSet::make(2, {0, 1}));
    CHECK(v.terms()[0].module.size() == 8);
    CHECK(v.terms()[0].coefficient * v.terms()[0].module.summands()[0].mult == 4);
    CHECK_THROWS_AS(chain_term(c2, Chain({{0, Threshold::finite(0)}}), 1, Weight::zero(2)), ValidationError);
    CHECK_THROWS_AS(Chain({{0, Threshold::finite(0)}, {1, Threshold::finite(0)}}), ValidationError);
  }

  TEST_CASE("restrict_weighted d = 1") {
    const auto ctx = build_context(1, 3);
    for (Int k = 0; k <= 5; ++k) {
      for (const auto& profile : {ic_profiles(1).t, ic_profiles(1).s}) {
        const auto cls = restrict_weighted(ctx, profile, Weight({k}, 0), 0);
        REQUIRE(cls.terms().size() == 1);
        REQUIRE(cls.terms()[0].module.size() == 1);
        CHECK(cls.terms()[0].module.summands()[0].degree == 0);
        CHECK(cls.terms()[0].module.summands()[0].weight == Weight({k}, 0));
        CHECK(euler_evaluate(cls, ctx) == 1);
      }
    }
    CHECK(restrict_weighted(ctx, constant(1, Threshold::pos_inf()), Weight({2}, 0), 0).empty());
    CHECK_THROWS_AS(restrict_weighted(ctx, constant(1, Threshold::finite(0)), Weight({2}, 0), 1), ValidationError);
    CHECK_THROWS_AS(restrict_weighted(ctx, constant(2, Threshold::finite(0)), Weight({2}, 0), 0), ValidationError);
  }

  TEST_CASE("restrict_ic d = 1") {
    const auto ctx = build_context(1, 3);
    for (Int k : {0, 2}) {
      const auto [t, s] = restrict_ic(ctx, Weight({k}, 0), 0);
      CHECK(t == s);
      CHECK(euler_evaluate(t, ctx) == 1);
    }
  }

  TEST_CASE("IC profiles agree under the Euler evaluation") {
    for (int d = 1; d <= 2; ++d)
      for (Int n : {3, 4}) {
        const auto ctx = build_context(d, n);
        for (const auto& lambda : dominant_weights(d, 3))
          for (int r = 0; r < d; ++r) {
            const auto [t, s] = restrict_ic(ctx, lambda, r);
            CHECK(euler_evaluate(t, ctx) == euler_evaluate(s, ctx));
          }
      }
  }

  TEST_CASE("chain expansion reproduces restrict_weighted") {
    std::vector<Threshold> values{Threshold::neg_inf(), Threshold::pos_inf()};
    for (Int t = -5; t <= 3; ++t) values.push_back(Threshold::finite(t));
    for (int d = 1; d <= 2; ++d) {
      const auto ctx = build_context(d, 3);
      for (const auto& lambda : dominant_weights(d, 2))
        for (const auto& t0 : values)
          for (const auto& t1 : values) {
            Profile p{t0};
            if (d == 2) p.push_back(t1);
            for (int r = 0; r < d; ++r) CHECK(assemble_from_chains(ctx, p, lambda, r) == restrict_weighted(ctx, p, lambda, r));
          }
    }
  }

  TEST_CASE("degeneration to the untruncated alternating sum") {
    // t_r = −∞ keeps everything at r, t_s = +∞ keeps everything at s ≠ r.
    for (int d = 1; d <= 3; ++d) {
      const auto ctx = build_context(d, 4);
      for (int r = 0; r < d; ++r) {
        Profile p = constant(d, Threshold::pos_inf());
        p[static_cast<std::size_t>(r)] = Threshold::neg_inf();
        const Weight lambda = dominant_weights(d, 2).back();
        SymbolicClass expected;
        for (unsigned mask = 0; mask < (1u << (d - 1 - r)); ++mask) {
          std::vector<int> idx{r};
          for (int b = 0; b < d - 1 - r; ++b)
            if (mask & (1u << b)) idx.push_back(r + 1 + b);
          const auto S = ParabolicSet::make(d, idx);
          const BigInt sign = idx.size() % 2 == 1 ? 1 : -1;
          expected.add(sign * double_coset_count(ctx, r, S), lie_n_cohomology(ctx, S, lambda));
        }
        CHECK(restrict_weighted(ctx, p, lambda, r) == expected);
      }
    }
  }

  TEST_CASE("profile monotonicity") {
    const auto ctx = build_context(2, 3);
    const Weight lambda({2, 1}, 0);
    for (Int t = -6; t <= 4; ++t)
      for (int r = 0; r < 2; ++r) {
        // single-S view: lowering the threshold grows the >= part at r
        const auto S = ParabolicSet::maximal(2, r);
        const auto M = lie_n_cohomology(ctx, S, lambda);
        const TruncationCondition hi[] = {{r, Threshold::finite(t), TruncMode::AtLeast}};
        const TruncationCondition lo[] = {{r, Threshold::finite(t - 1), TruncMode::AtLeast}};
        CHECK(truncate(M, hi).size() <= truncate(M, lo).size());
        const TruncationCondition below[] = {{r, Threshold::finite(t), TruncMode::Below}};
        const TruncationCondition belowLower[] = {{r, Threshold::finite(t - 1), TruncMode::Below}};
        CHECK(truncate(M, belowLower).size() <= truncate(M, below).size());
      }
  }

  TEST_CASE("linearity in V") {
    const auto ctx = build_context(2, 3);
    const auto p = ic_profiles(2).t;
    const Weight x({2, 0}, 0), y({1, 1}, 0);
    const GradedWeight V[] = {{0, x, 1}, {1, y, 2}};
    for (int r = 0; r < 2; ++r) {
      SymbolicClass sum = restrict_weighted(ctx, p, x, r);
      // the degree-1 copy: shift by one, two copies
      const GradedWeight Y[] = {{1, y, 2}};
      sum.add(restrict_weighted(ctx, p, Y, r));
      CHECK(restrict_weighted(ctx, p, V, r) == sum);
      CHECK(euler_evaluate(restrict_weighted(ctx, p, Y, r), ctx) == -2 * euler_evaluate(restrict_weighted(ctx, p, y, r), ctx));
    }
    const GradedWeight mixed[] = {{0, x, 1}, {0, Weight({1, 0}, 0), 1}};
    CHECK_THROWS_AS(restrict_weighted(ctx, p, mixed, 0), ValidationError);
  }

  TEST_CASE("duality for d = 1 at the level of graded dimensions") {
    // The dual profile s = 1 − t + 2(c_1 − c_0) = −1 − t, λ* = −w_0 λ.
    // i^* of the weighted complex in degree q matches i^! of the dual one in
    // degree 2c_0 − q, where i^! is the complement of i^* in RΓ(Lie N, V*)
    // placed one degree higher.
    const auto ctx = build_context(1, 3);
    const auto S = ParabolicSet::make(1, {0});
    for (Int k = 0; k <= 4; ++k)
      for (Int m0 = -2; m0 <= 2; ++m0)
        for (Int t = -6; t <= 6; ++t) {
          const Weight lambda({k}, m0);
          const Weight dual({k}, -m0 - k);
          const auto cls = restrict_weighted(ctx, {Threshold::finite(t)}, lambda, 0);
          const auto dualCls = restrict_weighted(ctx, {Threshold::finite(-1 - t)}, dual, 0);
          SymbolicClass shriek;
          shriek.add(1, lie_n_cohomology(ctx, S, dual));
          shriek.add(dualCls, -1);
          std::map<int, BigInt> reflected;
          for (const auto& [q, dim] : graded_dims(shriek)) reflected[2 * static_cast<int>(ctx.c) - (q + 1)] = dim;
          CHECK(graded_dims(cls) == reflected);
        }
  }

  TEST_CASE("expansion terms") {
    CHECK(expansion_terms(0).size() == 1);
    CHECK(expansion_terms(0)[0].sign == 1);
    std::vector<int> signs;
    for (const auto& t : expansion_terms(2)) signs.push_back(t.sign);
    CHECK(signs == std::vector<int>{1, -1, -1, 1});
    for (int n = 0; n <= 8; ++n) {
      const auto terms = expansion_terms(n);
      CHECK(terms.size() == (std::size_t{1} << n));
      int sum = 0;
      for (const auto& t : terms) {
        sum += t.sign;
        CHECK(std::is_sorted(t.chain.begin(), t.chain.end()));
      }
      CHECK(sum == (n == 0 ? 1 : 0));
    }
  }

  TEST_CASE("euler evaluation") {
    const auto ctx = build_context(2, 3);
    CHECK(euler_evaluate(SymbolicClass{}, ctx) == 0);
    // GL_2 block (S = {0}), graded dimension χ = 5 → 5 · e(Γ(3)) = −10
    GradedVirtualRep M(ParabolicSet::make(2, {0}));
    M.add(0, Weight({4, 0}, 0), 1);
    CHECK(weyl_dim(to_levi_weight(M.shape(), Weight({4, 0}, 0))) == 5);
    SymbolicClass cls;
    cls.add(1, M);
    CHECK(euler_evaluate(cls, ctx) == -10);
    const auto c3 = build_context(3, 3);
    GradedVirtualRep big(ParabolicSet::make(3, {0}));
    big.add(0, Weight::zero(3), 1);
    SymbolicClass zero;
    zero.add(7, big);
    CHECK(euler_evaluate(zero, c3) == 0);
  }

  TEST_CASE("graded report") {
    CHECK(graded_report(SymbolicClass{}).empty());
    const auto ctx = build_context(1, 3);
    for (Int k = 0; k <= 3; ++k) {
      const auto rows = graded_report(restrict_ic(ctx, Weight({k}, 0), 0).first);
      REQUIRE(rows.size() == 1);
      CHECK(rows[0].degree == 0);
      CHECK(rows[0].centralWeight == k);
      CHECK(rows[0].sheafWeight == -k);
    }
    const auto c2 = build_context(2, 3);
    const auto cls = restrict_weighted(c2, constant(2, Threshold::neg_inf()), Weight({1, 0}, 0), 0);
    std::size_t summands = 0;
    for (const auto& t : cls.terms()) summands += t.module.size();
    CHECK(graded_report(cls).size() == summands);
  }

  TEST_CASE("profile and chain parsing") {
    const auto p = parse_profile("-inf,3", 2);
    CHECK(p == Profile{Threshold::neg_inf(), Threshold::finite(3)});
    CHECK_THROWS_AS(parse_profile("1", 2), ValidationError);
    const auto c = Chain::parse("2:inf,0:-1");
    CHECK(c.links().size() == 2);
    CHECK(c.threshold(0) == Threshold::neg_inf());
    CHECK(c.threshold(1) == Threshold::finite(1));
    CHECK(Chain::parse(c.to_string()).to_string() == c.to_string());
  }
}
