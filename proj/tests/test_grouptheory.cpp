#include "oracles.hpp"
#include "siegel/errors.hpp"
#include "siegel/grouptheory.hpp"
#include "siegel/reps.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace siegel;

TEST_SUITE("grouptheory") {
  TEST_CASE("context invariants") {
    for (int d = 1; d <= 5; ++d) {
      const auto ctx = build_context(d, 3);
      Int fact = 1;
      for (int i = 2; i <= d; ++i) fact *= i;
      CHECK(ctx.weylOrder == (Int(1) << d) * fact);
      CHECK(static_cast<int>(ctx.positiveRoots.size()) == d * d);
      CHECK(ctx.dimG == 2 * Int(d) * d + d + 1);
      CHECK(ctx.dimG == 2 * static_cast<Int>(ctx.positiveRoots.size()) + d + 1);
      CHECK(ctx.c == ctx.stratumDims[0]);
      CHECK(static_cast<Int>(ctx.weyl.size()) == ctx.weylOrder);
    }
    const auto c1 = build_context(1, 3);
    CHECK(c1.weylOrder == 2);
    CHECK(c1.c == 1);
    const auto c2 = build_context(2, 3);
    CHECK(c2.weylOrder == 8);
    CHECK(c2.dimG == 11);
    CHECK(c2.stratumDims == std::vector<Int>{3, 1, 0});
  }

  TEST_CASE("context rejects bad input") {
    CHECK_THROWS_AS(build_context(2, 2), ValidationError);
    CHECK_THROWS_AS(build_context(0, 3), ValidationError);
    CHECK_THROWS_AS(build_context(7, 3), ScopeError);
    CHECK_NOTHROW(build_context(7, 3, 7));
  }

  TEST_CASE("dim G against the Lie algebra of the matrix model") {
    for (int d = 1; d <= 3; ++d) {
      const auto ctx = build_context(d, 3);
      CHECK(oracle::gsp_subspace_dim(d, [](int, int) { return true; }, true) == ctx.dimG);
      // strictly upper triangular part: the positive root spaces
      CHECK(oracle::gsp_subspace_dim(d, [](int i, int j) { return i < j; }, false) == d * d);
    }
  }

  TEST_CASE("weyl group against generation by simple reflections") {
    for (int d = 1; d <= 4; ++d) {
      const auto orbit = oracle::weyl_orbit_lengths(d);
      const auto W = weyl_group(d);
      REQUIRE(W.size() == orbit.size());
      const Weight mu = oracle::regular_weight(d);
      int longest = 0;
      for (const auto& w : W) {
        const auto it = orbit.find(w.apply(mu));
        REQUIRE(it != orbit.end());
        CHECK(w.length == it->second);
        if (w.length == d * d) ++longest;
      }
      CHECK(longest == 1);
    }
    std::multiset<int> lengths;
    for (const auto& w : weyl_group(2)) lengths.insert(w.length);
    CHECK(lengths == std::multiset<int>{0, 1, 1, 2, 2, 3, 3, 4});
    CHECK(weyl_group(1).size() == 2);
    CHECK(weyl_group(3).size() == 48);
  }

  TEST_CASE("length bound under composition") {
    const auto W = weyl_group(3);
    for (const auto& x : W)
      for (std::size_t j = 0; j < W.size(); j += 5) {
        const auto& y = W[j];
        const auto xy = compose(x, y);
        CHECK(std::abs(xy.length - x.length) <= y.length);
        CHECK(xy.apply(oracle::regular_weight(3)) == x.apply(y.apply(oracle::regular_weight(3))));
      }
    CHECK(WeylElt::identity(3).length == 0);
  }

  TEST_CASE("parabolic data examples") {
    const auto ctx = build_context(2, 3);
    auto pd = parabolic_data(ctx, ParabolicSet::make(2, {0}));
    CHECK(pd.leviBlocks == std::vector<int>{2});
    CHECK(pd.sympRank == 0);
    CHECK(pd.dimN == 3);
    pd = parabolic_data(ctx, ParabolicSet::make(2, {1}));
    CHECK(pd.leviBlocks == std::vector<int>{1});
    CHECK(pd.sympRank == 1);
    CHECK(pd.dimN == 3);
    CHECK(pd.dimU == 1);
    pd = parabolic_data(ctx, ParabolicSet::make(2, {0, 1}));
    CHECK(pd.leviBlocks == std::vector<int>{1, 1});
    CHECK(pd.sympRank == 0);
    CHECK(pd.dimN == 4);
    CHECK_THROWS_AS(ParabolicSet::make(2, {}), ValidationError);
    CHECK_THROWS_AS(ParabolicSet::make(2, {2}), ValidationError);
  }

  TEST_CASE("dim N_S and dim U_r against block patterns in the matrix model") {
    for (int d = 1; d <= 3; ++d) {
      const auto ctx = build_context(d, 3);
      for (unsigned mask = 1; mask < (1u << d); ++mask) {
        std::vector<int> idx;
        for (int b = 0; b < d; ++b)
          if (mask & (1u << b)) idx.push_back(b);
        const auto S = ParabolicSet::make(d, idx);
        const auto pd = parabolic_data(ctx, S);
        const int r = S.r();
        // block of each of the 2d coordinates: GL blocks, the GSp block, mirrored GL blocks
        std::vector<int> block;
        int b = 0;
        for (int n : pd.leviBlocks) {
          for (int i = 0; i < n; ++i) block.push_back(b);
          ++b;
        }
        for (int i = 0; i < 2 * r; ++i) block.push_back(b);
        for (auto it = pd.leviBlocks.rbegin(); it != pd.leviBlocks.rend(); ++it) {
          ++b;
          for (int i = 0; i < *it; ++i) block.push_back(b);
        }
        const int dimN = oracle::gsp_subspace_dim(
            d, [&](int i, int j) { return block[static_cast<std::size_t>(i)] < block[static_cast<std::size_t>(j)]; }, false);
        CHECK(dimN == pd.dimN);
        const int k = d - r;
        const int dimU = oracle::gsp_subspace_dim(d, [&](int i, int j) { return i < k && j >= 2 * d - k; }, false);
        CHECK(dimU == pd.dimU);
        CHECK(pd.dimU == Int(k) * (k + 1) / 2);
        CHECK(pd.dimN == static_cast<Int>(pd.nRoots.size()));
        int sum = 0;
        for (int n : pd.leviBlocks) sum += n;
        CHECK(sum == k);
        if (S.size() == 1) CHECK(pd.dimN == Int(k) * (k + 1) / 2 + 2 * Int(r) * k);
        for (const auto& u : pd.uRoots) CHECK(std::find(pd.nRoots.begin(), pd.nRoots.end(), u) != pd.nRoots.end());
      }
    }
  }

  TEST_CASE("kostant representatives are the minimal coset elements") {
    for (int d = 1; d <= 4; ++d) {
      const auto ctx = build_context(d, 3);
      for (unsigned mask = 1; mask < (1u << d); ++mask) {
        std::vector<int> idx;
        for (int b = 0; b < d; ++b)
          if (mask & (1u << b)) idx.push_back(b);
        const auto S = ParabolicSet::make(d, idx);
        const auto pd = parabolic_data(ctx, S);
        // W_L generated by the Levi simple reflections
        std::vector<WeylElt> WL{WeylElt::identity(d)};
        for (std::size_t i = 0; i < WL.size(); ++i)
          for (int k : pd.leviSimple) {
            const auto x = compose(simple_reflection(d, k), WL[i]);
            if (std::find(WL.begin(), WL.end(), x) == WL.end()) WL.push_back(x);
          }
        CHECK(static_cast<Int>(WL.size()) == levi_weyl_order(levi_shape(S)));
        // minimal element of each right coset W_L w
        std::set<WeylElt> minimal;
        std::set<WeylElt> seen;
        for (const auto& w : ctx.weyl) {
          if (seen.count(w)) continue;
          WeylElt best = w;
          for (const auto& x : WL) {
            const auto y = compose(x, w);
            seen.insert(y);
            if (y.length < best.length) best = y;
          }
          minimal.insert(best);
        }
        const auto reps = kostant_reps(ctx, S);
        CHECK(std::set<WeylElt>(reps.begin(), reps.end()) == minimal);
        CHECK(static_cast<Int>(reps.size()) == ctx.weylOrder / levi_weyl_order(levi_shape(S)));
        // Poincaré polynomial at −1 and top degree
        Int alternating = 0;
        int maxLength = 0;
        for (const auto& w : reps) {
          alternating += w.length % 2 == 0 ? 1 : -1;
          maxLength = std::max(maxLength, w.length);
          CHECK(w.length <= pd.dimN);
        }
        if (pd.dimN > 0) CHECK(alternating == 0);
        CHECK(maxLength == pd.dimN);
      }
    }
    const auto c1 = build_context(1, 3);
    const auto r1 = kostant_reps(c1, ParabolicSet::make(1, {0}));
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].length == 0);
    CHECK(r1[1].length == 1);
    const auto c2 = build_context(2, 3);
    std::vector<int> lengths;
    for (const auto& w : kostant_reps(c2, ParabolicSet::make(2, {1}))) lengths.push_back(w.length);
    CHECK(lengths == std::vector<int>{0, 1, 2, 3});
    CHECK(kostant_reps(c2, ParabolicSet::make(2, {0, 1})).size() == 8);
  }
}
