#include <doctest.h>

#include <random>

#include "phylotope/facet_sources.hpp"
#include "phylotope/normality.hpp"

using namespace phylotope;

TEST_CASE("sums of vertices always decompose") {
  std::mt19937_64 rng(20240020);
  for (auto factors : {std::vector<int>{2}, {3}, {2, 2}, {6}}) {
    auto P = claw_polytope(GroupSpec(factors), 3);
    for (int k : {1, 2, 3, 4}) {
      Coords x(P.ambient_dim(), 0);
      for (int i = 0; i < k; ++i) x = x + P.vertices[rng() % P.vertices.size()];
      auto res = decompose_brute(P, x, k);
      CHECK(res.decomposable);
      REQUIRE(static_cast<int>(res.summands.size()) == k);
      Coords sum(P.ambient_dim(), 0);
      for (const auto& v : res.summands) sum = sum + v;
      CHECK(sum == x);
    }
  }
}

TEST_CASE("decompose_brute is deterministic") {
  auto P = claw_polytope(GroupSpec({3}), 3);
  Coords x = P.vertices[0] + P.vertices[3] + P.vertices[7];
  auto a = decompose_brute(P, x, 3);
  auto b = decompose_brute(P, x, 3);
  CHECK(a.summands == b.summands);
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("decompose_brute rejects malformed inputs") {
  auto P = claw_polytope(GroupSpec({2}), 3);
  Coords negative(P.ambient_dim(), 0);
  negative[0] = -1;
  CHECK_THROWS_AS((decompose_brute(P, negative, 1)), std::invalid_argument);
  Coords wrong_sum(P.ambient_dim(), 0);
  wrong_sum[0] = 1;
  CHECK_THROWS_AS((decompose_brute(P, wrong_sum, 1)), std::invalid_argument);
  Coords off_lattice(P.ambient_dim(), 0);
  off_lattice[P.coord(0, 1)] = 1;
  off_lattice[P.coord(1, 0)] = 1;
  off_lattice[P.coord(2, 0)] = 1;
  CHECK_THROWS_AS((decompose_brute(P, off_lattice, 1)), std::invalid_argument);
}

TEST_CASE("witness construction for the order-six cyclic group") {
  auto rep = nonnormal_witness(GroupSpec({6}));
  CHECK(rep.g == std::vector<int>{3});
  CHECK(rep.h == std::vector<int>{1});
  CHECK(rep.in_lattice);
  CHECK(rep.in_dilation);
  REQUIRE(rep.doubled_decomposition.size() == 8);
  auto P = claw_polytope(GroupSpec({6}), 3);
  Coords doubled(P.ambient_dim(), 0);
  for (const auto& v : rep.doubled_decomposition) {
    CHECK(P.vertex_index(v) >= 0);
    doubled = doubled + v;
  }
  CHECK(doubled == 2 * rep.point);
  // the point itself does not split into four vertices
  CHECK_FALSE(rep.verdict.decomposable);
  CHECK(rep.verdict.nodes_explored > 0);
  // multisets all equal {0, 1, 3, 4}
  auto pres = to_g_presentation(P, rep.point);
  for (const auto& ms : pres.multisets) CHECK(ms == std::vector<int>{0, 1, 3, 4});
  // but the doubled point does decompose by brute force as well
  CHECK(decompose_brute(P, 2 * rep.point, 8).decomposable);
}

TEST_CASE("witness pair selection matches the subgroup argument") {
  auto rep = nonnormal_witness(GroupSpec({2, 4}));
  CHECK(rep.g == std::vector<int>{1, 0});
  CHECK(rep.h == std::vector<int>{0, 1});
  CHECK_FALSE(rep.verdict.decomposable);
}

TEST_CASE("witnesses for the remaining small even groups") {
  for (auto factors : {std::vector<int>{8}, {2, 2, 2}}) {
    auto rep = nonnormal_witness(GroupSpec(factors));
    CHECK(rep.in_lattice);
    CHECK(rep.in_dilation);
    CHECK_FALSE(rep.verdict.decomposable);
  }
  CHECK_THROWS_AS((nonnormal_witness(GroupSpec({5}))), std::invalid_argument);
  CHECK_THROWS_AS((nonnormal_witness(GroupSpec({4}))), std::invalid_argument);
  CHECK_THROWS_AS((nonnormal_witness(GroupSpec({2, 2}))), std::invalid_argument);
}

TEST_CASE("binary and ternary tripods are normal at desk scale") {
  for (auto factors : {std::vector<int>{2}, {3}}) {
    auto P = claw_polytope(GroupSpec(factors), 3);
    ensure_facets(P);
    auto rep = check_normality(P, 4);
    CHECK(rep.normal_up_to_kmax);
    REQUIRE(rep.levels.size() == 4);
    CHECK(rep.levels[0].point_count == P.vertices.size());
    for (const auto& lvl : rep.levels) CHECK(lvl.all_decompose);
  }
}

TEST_CASE("normality scan finds the order-six witness at level four") {
  auto P = claw_polytope(GroupSpec({6}), 3);
  ensure_facets(P, FacetMode::Auto, KernelBounds{40, 16});
  auto rep = check_normality(P, 4);
  CHECK_FALSE(rep.normal_up_to_kmax);
  REQUIRE(rep.levels.size() == 4);
  // minimality: all levels below four decompose
  CHECK(rep.levels[0].all_decompose);
  CHECK(rep.levels[1].all_decompose);
  CHECK(rep.levels[2].all_decompose);
  CHECK_FALSE(rep.levels[3].all_decompose);
  REQUIRE(rep.levels[3].witness.has_value());
  CHECK_FALSE(decompose_brute(P, *rep.levels[3].witness, 4).decomposable);
}
