#include "siegel/arith.hpp"
#include "siegel/errors.hpp"

#include <doctest.h>

#include <array>
#include <numeric>
#include <set>

using namespace siegel;

namespace {

// Direct count of invertible k×k matrices mod n with a naive determinant.
Int count_gl(int k, Int n, bool special) {
  Int total = 1;
  for (int i = 0; i < k * k; ++i) total *= n;
  Int count = 0;
  std::vector<Int> e(static_cast<std::size_t>(k * k));
  for (Int code = 0; code < total; ++code) {
    Int c = code;
    for (auto& x : e) {
      x = c % n;
      c /= n;
    }
    Int det = 0;
    if (k == 1) det = e[0];
    if (k == 2) det = e[0] * e[3] - e[1] * e[2];
    det = ((det % n) + n) % n;
    if (special ? det == 1 : std::gcd(det, n) == 1) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("group order examples") {
    CHECK(group_order(GroupKind::gl(2), 3) == 48);
    for (Int n = 2; n <= 30; ++n) CHECK(group_order(GroupKind::gl(1), n) == euler_phi(n));
    CHECK(group_order(GroupKind::sp(2), 3) == 51840);
    CHECK(group_order(GroupKind::gsp(2), 3) == 103680);
    CHECK(group_order(GroupKind::unipotent(3), 5) == 125);
    CHECK_THROWS_AS(group_order(GroupKind::gl(2), 1), ValidationError);
  }

  TEST_CASE("group orders against direct counts") {
    for (Int n = 2; n <= 9; ++n) {
      CHECK(group_order(GroupKind::gl(2), n) == count_gl(2, n, false));
      CHECK(group_order(GroupKind::sl(2), n) == count_gl(2, n, true));
      // GSp_2 = GL_2 and Sp_2 = SL_2
      CHECK(group_order(GroupKind::gsp(1), n) == count_gl(2, n, false));
      CHECK(group_order(GroupKind::sp(1), n) == count_gl(2, n, true));
    }
  }

  TEST_CASE("Sp(4) over F_3 generated by root elements") {
    // Independent of both the formula and the column search: close the
    // root subgroups.
    std::vector<ModMatrix> gens;
    for (const auto& beta : positive_roots(2)) {
      gens.push_back(root_element(2, beta, 3));
      gens.push_back(root_element(2, beta * -1, 3));
    }
    CHECK(subgroup_closure(gens, 100000).size() == 51840);
  }

  TEST_CASE("multiplicativity over coprime moduli") {
    const std::vector<GroupKind> kinds{GroupKind::gl(2), GroupKind::sl(3), GroupKind::sp(2), GroupKind::gsp(3),
                                       GroupKind::unipotent(4)};
    for (const auto& kind : kinds)
      for (Int a = 2; a <= 12; ++a)
        for (Int b = 2; b <= 12; ++b)
          if (std::gcd(a, b) == 1) CHECK(group_order(kind, a * b) == group_order(kind, a) * group_order(kind, b));
  }

  TEST_CASE("congruence index") {
    CHECK(congruence_index(GroupKind::gl(2), 3, 6) == 6);
    CHECK(congruence_index(GroupKind::sl(2), 3, 6) == 6);
    CHECK(congruence_index(GroupKind::gsp(2), 5, 5) == 1);
    CHECK_THROWS_AS(congruence_index(GroupKind::gl(2), 3, 8), ValidationError);
    const std::vector<std::array<Int, 3>> chains{{3, 6, 12}, {3, 9, 27}, {4, 8, 24}, {5, 10, 30}};
    for (const auto& kind : {GroupKind::sl(2), GroupKind::gsp(2), GroupKind::sl(3)})
      for (auto [n, m1, m2] : chains)
        CHECK(congruence_index(kind, n, m1) * congruence_index(kind, m1, m2) == congruence_index(kind, n, m2));
  }

  TEST_CASE("integral image order") {
    CHECK(integral_image_order(0, 7) == 1);
    CHECK(integral_image_order(2, 3) == 48);
    CHECK(integral_image_order(2, 4) == 96);
    CHECK(integral_image_order(2, 2) == 6);
    CHECK(integral_image_order(3, 1) == 1);
  }

  TEST_CASE("Bernoulli numbers and zeta values") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == ExactRational(-1, 2));
    CHECK(bernoulli(2) == ExactRational(1, 6));
    CHECK(bernoulli(4) == ExactRational(-1, 30));
    CHECK(bernoulli(6) == ExactRational(1, 42));
    CHECK(bernoulli(12) == ExactRational(-691, 2730));
    CHECK(bernoulli(7) == 0);
    CHECK(zeta_one_minus(2) == ExactRational(-1, 12));
    CHECK(zeta_one_minus(3) == 0);
  }

  TEST_CASE("Euler characteristic of principal congruence subgroups") {
    CHECK(euler_char_congruence(1, 3) == 1);
    CHECK(euler_char_congruence(1, 10) == 1);
    CHECK(euler_char_congruence(2, 3) == -2);
    CHECK(euler_char_congruence(3, 3) == 0);
    CHECK(euler_char_congruence(4, 5) == 0);
    for (Int n = 3; n <= 40; ++n) {
      const auto chi = euler_char_congruence(2, n);
      CHECK(denominator(chi) == 1);
      CHECK(chi == ExactRational(-count_gl(2, n, true), 12));
    }
    CHECK_THROWS_AS(euler_char_congruence(2, 2), ValidationError);
  }

  TEST_CASE("brute force enumeration") {
    const auto gl2 = brute_force_group(GroupKind::gl(2), 3);
    CHECK(gl2.size() == 48);
    CHECK(std::set<ModMatrix>(gl2.begin(), gl2.end()).size() == 48);
    CHECK(std::is_sorted(gl2.begin(), gl2.end()));
    const auto gl1 = brute_force_group(GroupKind::gl(1), 5);
    REQUIRE(gl1.size() == 4);
    for (Int x = 1; x <= 4; ++x) CHECK(gl1[static_cast<std::size_t>(x - 1)](0, 0) == x);
    const std::vector<std::pair<GroupKind, Int>> cases{
        {GroupKind::gl(2), 4},  {GroupKind::sl(2), 5},  {GroupKind::sp(1), 6},       {GroupKind::gsp(1), 7},
        {GroupKind::gsp(0), 9}, {GroupKind::sp(0), 4},  {GroupKind::unipotent(3), 4}, {GroupKind::gl(0), 3},
        {GroupKind::sl(3), 2},  {GroupKind::gl(3), 2}};
    for (const auto& [kind, n] : cases) {
      const auto G = brute_force_group(kind, n);
      CHECK(BigInt(G.size()) == group_order(kind, n));
      CHECK(std::set<ModMatrix>(G.begin(), G.end()).size() == G.size());
    }
    CHECK_THROWS_AS(brute_force_group(GroupKind::gl(2), 3, {40, 1}), ScopeError);
  }

  TEST_CASE("GSp(4) over F_3 enumeration, threaded and unthreaded") {
    const auto one = brute_force_group(GroupKind::gsp(2), 3, {200000, 1});
    CHECK(one.size() == 103680);
    const auto many = brute_force_group(GroupKind::gsp(2), 3, {200000, 3});
    CHECK(one == many);
    for (std::size_t i = 0; i < one.size(); i += 997) CHECK(similitude_factor(one[i]).has_value());
  }

  TEST_CASE("group kind names") {
    for (const auto& k : {GroupKind::gl(3), GroupKind::sl(2), GroupKind::sp(2), GroupKind::gsp(1), GroupKind::unipotent(5)})
      CHECK(GroupKind::parse(k.to_string()) == k);
    CHECK_THROWS_AS(GroupKind::parse("Sp(3)"), ValidationError);
  }
}
