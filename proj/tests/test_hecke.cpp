#include "siegel/errors.hpp"
#include "siegel/hecke.hpp"
#include "siegel/strata.hpp"

#include <doctest.h>

#include <map>

using namespace siegel;

namespace {

std::map<Int, Int> row_sums(const HeckeMatrix& h) {
  std::map<Int, Int> out;
  for (const auto& [key, cell] : h.cells) out[key.first] += cell.count;
  return out;
}

std::map<Int, Int> column_sums(const HeckeMatrix& h) {
  std::map<Int, Int> out;
  for (const auto& [key, cell] : h.cells) out[key.second] += cell.count;
  return out;
}

}  // namespace

TEST_SUITE("hecke") {
  TEST_CASE("index examples") {
    CHECK(hecke_index(build_context(1, 3), ParabolicSet::make(1, {0}), 6) == 2);
    CHECK(hecke_index(build_context(2, 3), ParabolicSet::make(2, {0}), 6) == 48);
    CHECK(hecke_index(build_context(2, 3), ParabolicSet::make(2, {0, 1}), 3) == 1);
    CHECK(transfer_degree(1, 3, 6) == 6);
    CHECK(boundary_fiber_count(build_context(1, 3), 0, 6) == 3);
    CHECK_THROWS_AS(hecke_index(build_context(1, 3), ParabolicSet::make(1, {0}), 4), ValidationError);
  }

  TEST_CASE("index matches the brute-force image") {
    const auto S1 = ParabolicSet::make(1, {0});
    for (auto [n, m] : std::vector<std::pair<Int, Int>>{{3, 6}, {3, 9}, {4, 8}, {5, 10}, {3, 12}})
      CHECK(BigInt(brute_force_hecke_index(1, S1, n, m)) == hecke_index(build_context(1, n), S1, m));
    const auto S2 = ParabolicSet::make(2, {0});
    CHECK(brute_force_hecke_index(2, S2, 3, 6) == 48);
    const auto S3 = ParabolicSet::make(2, {1});
    CHECK(BigInt(brute_force_hecke_index(2, S3, 3, 6)) == hecke_index(build_context(2, 3), S3, 6));
    const auto S4 = ParabolicSet::make(2, {0, 1});
    CHECK(BigInt(brute_force_hecke_index(2, S4, 3, 6)) == hecke_index(build_context(2, 3), S4, 6));
  }

  TEST_CASE("index is multiplicative in towers") {
    for (int d = 1; d <= 3; ++d) {
      const auto ctx3 = build_context(d, 3);
      const auto ctx6 = build_context(d, 6);
      for (int r = 0; r < d; ++r) {
        const auto S = ParabolicSet::maximal(d, r);
        CHECK(hecke_index(ctx3, S, 12) == hecke_index(ctx3, S, 6) * hecke_index(ctx6, S, 12));
        CHECK(transfer_degree(d, 3, 12) == transfer_degree(d, 3, 6) * transfer_degree(d, 6, 12));
      }
    }
  }

  TEST_CASE("identity element gives a diagonal structure") {
    const auto S = ParabolicSet::make(1, {0});
    const auto h = hecke_matrix_structure({1, 3, 3, parse_hecke_element("identity", 1, 3)}, S, false);
    CHECK(h.levelNClasses == 4);
    CHECK(h.levelMClasses == 4);
    CHECK(h.cells.size() == 4);
    for (const auto& [key, cell] : h.cells) {
      CHECK(key.first == key.second);
      CHECK(cell.count == 1);
      CHECK(cell.coefficient == 1);
    }
  }

  TEST_CASE("level change 3 -> 6 for d = 1") {
    const auto S = ParabolicSet::make(1, {0});
    for (const std::string g : {"identity", "1,1;0,1", "0,1;5,0", "1,0;1,5"}) {
      const HeckeDatum datum{1, 3, 6, parse_hecke_element(g, 1, 6)};
      const auto h = hecke_matrix_structure(datum, S, false);
      CHECK(BigInt(h.levelNClasses) == strata_count(build_context(1, 3), 0));
      CHECK(BigInt(h.levelMClasses) == strata_count(build_context(1, 6), 0));
      Int total = 0;
      for (const auto& [key, cell] : h.cells) {
        total += cell.count;
        CHECK(cell.coefficient == 2);
      }
      CHECK(total == h.levelMClasses);
      for (const auto& [c, sum] : column_sums(h)) CHECK(sum == h.levelMClasses / h.levelNClasses);
      for (const auto& [c, sum] : row_sums(h)) CHECK(sum == h.levelMClasses / h.levelNClasses);
    }
  }

  TEST_CASE("annotations and input validation") {
    const auto S = ParabolicSet::make(1, {0});
    const auto h = hecke_matrix_structure({1, 3, 6, parse_hecke_element("1,1;0,1", 1, 6)}, S, true);
    for (const auto& [key, cell] : h.cells) {
      CHECK(cell.annotation.find("h=") == 0);
      CHECK(cell.annotation.find(" q2=") != std::string::npos);
    }
    CHECK_THROWS_AS(validate({1, 3, 6, parse_hecke_element("2,0;0,1", 1, 6)}), ValidationError);
    CHECK_THROWS_AS(validate({1, 3, 6, parse_hecke_element("1,1;1,1", 1, 6)}), ValidationError);
    CHECK_THROWS_AS(validate({1, 3, 4, parse_hecke_element("identity", 1, 4)}), ValidationError);
    CHECK_THROWS_AS(parse_hecke_element("1/2,0;0,1", 1, 6), ScopeError);
    CHECK_THROWS_AS(parse_hecke_element("1,0,0;0,1,0", 1, 6), ValidationError);
    // symplectic similitude with factor 5 (a unit mod 6)
    CHECK_NOTHROW(validate({2, 3, 6, parse_hecke_element("1,0,0,0;0,1,0,0;0,0,5,0;0,0,0,5", 2, 6)}));
  }
}
