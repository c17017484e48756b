#include <doctest.h>

#include <random>

#include "phylotope/facet_sources.hpp"
#include "phylotope/gorenstein.hpp"

using namespace phylotope;

TEST_CASE("Kimura closed-form facet list") {
  auto sys3 = kimura_facets(3, 1);
  CHECK(sys3.facets.size() == 12 + 12);  // 4m non-negativity + 3 * 2^(m-1) subset facets
  CHECK(sys3.equalities.size() == 3);
  auto sys4 = kimura_facets(4, 1);
  CHECK(sys4.facets.size() == 16 + 24);
  // normalizers: 1 on coordinates, 2 on subset facets
  for (std::size_t i = 0; i < sys3.facets.size(); ++i)
    CHECK(sys3.facets[i].normalizer == (i < 12 ? 1 : 2));
  CHECK_THROWS_AS((kimura_facets(2, 1)), std::invalid_argument);
}

TEST_CASE("Kimura list certifies and matches brute force at m = 3") {
  auto P = claw_polytope(GroupSpec({2, 2}), 3);
  attach_kimura_facets(P);
  auto brute = enumerate_facets(P);
  CHECK(brute.size() == P.facets->size());
  CHECK(same_hyperplane_sets(P, *P.facets, brute));
}

TEST_CASE("Kimura list certifies at m = 4") {
  auto P = claw_polytope(GroupSpec({2, 2}), 4);
  attach_kimura_facets(P);  // verify_facet on all 64 vertices inside
  CHECK(P.facets->size() == 40);
}

TEST_CASE("Gorenstein indices of the four distinguished claws") {
  struct Case {
    std::vector<int> factors;
    int m;
    Int index;
  };
  for (auto c : std::vector<Case>{{{2}, 3, 4}, {{2}, 4, 2}, {{3}, 3, 3}, {{2, 2}, 3, 4}}) {
    auto P = claw_polytope(GroupSpec(c.factors), c.m);
    ensure_facets(P);
    auto rep = gorenstein_index(P);
    CHECK(rep.gorenstein);
    CHECK(rep.index == c.index);
    CHECK(rep.interior_count == 1);
    for (Int d : rep.distances) CHECK(d == 1);
  }
}

TEST_CASE("the non-Gorenstein claws are recognized") {
  struct Case {
    std::vector<int> factors;
    int m;
  };
  for (auto c : std::vector<Case>{{{2}, 5}, {{3}, 4}, {{2, 2}, 4}}) {
    auto P = claw_polytope(GroupSpec(c.factors), c.m);
    ensure_facets(P, FacetMode::Auto, KernelBounds{300, 13});
    auto rep = gorenstein_index(P);
    CHECK_FALSE(rep.gorenstein);
    CHECK_FALSE(rep.reason.empty());
  }
}

TEST_CASE("interior point distances on the subset facets follow (2m-4)/2") {
  for (int m : {3, 4}) {
    auto P = claw_polytope(GroupSpec({2, 2}), m);
    attach_kimura_facets(P);
    Coords omega(P.ambient_dim(), 1);
    // subset facets sit after the 4m coordinate facets
    for (std::size_t i = 4 * m; i < P.facets->size(); ++i) {
      Int d = lattice_distance(P, omega, dilate_facet((*P.facets)[i], 4));
      CHECK(d == (2 * m - 4) / 2);
    }
  }
}

TEST_CASE("gorenstein_index is inconclusive rather than wrong when k_max is too small") {
  auto P = claw_polytope(GroupSpec({2}), 3);
  ensure_facets(P);
  CHECK_THROWS_AS((gorenstein_index(P, 2)), std::runtime_error);
  CHECK_THROWS_AS((gorenstein_index(claw_polytope(GroupSpec({2}), 3))), std::invalid_argument);
}

TEST_CASE("normality spot check is recorded") {
  auto P = claw_polytope(GroupSpec({3}), 3);
  ensure_facets(P);
  auto rep = gorenstein_index(P, 0, 3);
  CHECK(rep.index == 3);
  CHECK(rep.normality_checked_k == 3);
  CHECK(rep.normality_ok);
  CHECK(rep.normality_at_decisive);  // decisive level 3 covered

  auto P2 = claw_polytope(GroupSpec({2, 2}), 3);
  ensure_facets(P2);
  auto rep2 = gorenstein_index(P2, 0, 3);
  CHECK(rep2.index == 4);
  CHECK(rep2.normality_ok);
  CHECK_FALSE(rep2.normality_at_decisive);  // decisive level 4 beyond the spot check
}

TEST_CASE("the verdict is invariant under coordinate symmetries") {
  std::mt19937_64 rng(20240030);
  auto base = claw_polytope(GroupSpec({3}), 3);
  std::vector<SymmetryAction> actions{
      SymmetryAction::h_action(base.group, {1, 2, 0}),
      SymmetryAction::edge_perm({2, 0, 1}),
      SymmetryAction::automorphism(GroupAutomorphism(base.group, {0, 2, 1})),
  };
  for (const auto& a : actions) {
    std::vector<Coords> moved;
    for (const auto& v : base.vertices) moved.push_back(apply_action(base, a, v));
    auto P = make_block_polytope(base.group, base.blocks, std::move(moved));
    P.facets = enumerate_facets(P);
    auto rep = gorenstein_index(P);
    CHECK(rep.gorenstein);
    CHECK(rep.index == 3);
  }
}
