#include <doctest.h>

#include <set>

#include "phylotope/facet_sources.hpp"
#include "phylotope/fiber.hpp"

using namespace phylotope;

namespace {

// Compare the product vertex set against the glued tree polytope through the
// block identification from glue_trees.
bool matches_glued_tree(const FiberProduct& fp, const Polytope& glued, const GluedTree& gt) {
  if (fp.product.vertices.size() != glued.vertices.size()) return false;
  const int s = fp.product.block_size();
  std::set<Coords> expected(glued.vertices.begin(), glued.vertices.end());
  for (const auto& v : fp.product.vertices) {
    Coords mapped(glued.ambient_dim(), 0);
    for (int j = 0; j < fp.m1; ++j) {
      int from = fp.product_block_of1(j);
      int to = gt.blocks_from1[j];
      for (int g = 0; g < s; ++g) mapped[to * s + g] = v[from * s + g];
    }
    for (int j = 0; j < fp.m2; ++j) {
      int from = fp.product_block_of2(j);
      int to = gt.blocks_from2[j];
      for (int g = 0; g < s; ++g) mapped[to * s + g] = v[from * s + g];
    }
    if (!expected.count(mapped)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("fiber product of two tripods equals the glued tree polytope") {
  for (auto factors : {std::vector<int>{2}, {3}, {2, 2}}) {
    GroupSpec g(factors);
    auto t = claw_polytope(g, 3);
    auto fp = fiber_product(t, SimplexProjection{2}, t, SimplexProjection{0});
    CHECK(fp.product.vertices.size() ==
          t.vertices.size() * t.vertices.size() / static_cast<std::size_t>(g.order()));
    CHECK(fp.onto1);
    CHECK(fp.onto2);

    auto gt = glue_trees(Tree::claw(3), 2, Tree::claw(3), 0);
    auto glued = tree_polytope(g, gt.tree);
    CHECK(matches_glued_tree(fp, glued, gt));
    CHECK(fp.checked_against_glued_tree);  // the construction re-checked it too

    // restriction maps land on factor vertices and agree on the shared block
    for (const auto& v : fp.product.vertices) {
      CHECK(t.vertex_index(fp.phi1(v)) >= 0);
      CHECK(t.vertex_index(fp.phi2(v)) >= 0);
    }
  }
}

TEST_CASE("a single-vertex factor cuts out the compatible face") {
  GroupSpec g({2});
  auto t = claw_polytope(g, 3);
  // one vertex carrying label 0 on its only block
  Coords point{1, 0};
  auto zero = make_block_polytope(g, 1, {point});
  auto fp = fiber_product(t, SimplexProjection{2}, zero, SimplexProjection{0});
  CHECK_FALSE(fp.onto2);
  // the face of the tripod with label 0 on block 2
  std::size_t expect = 0;
  for (const auto& v : t.vertices)
    if (t.labels(v)[2] == 0) ++expect;
  CHECK(fp.product.vertices.size() == expect);
}

TEST_CASE("mismatched groups are rejected") {
  auto a = claw_polytope(GroupSpec({2}), 3);
  auto b = claw_polytope(GroupSpec({3}), 3);
  CHECK_THROWS_AS((fiber_product(a, SimplexProjection{0}, b, SimplexProjection{0})),
                  std::invalid_argument);
}

TEST_CASE("lifted facets equal brute-force facets for small tree products") {
  for (auto factors : {std::vector<int>{2}, {3}}) {
    GroupSpec g(factors);
    auto t = claw_polytope(g, 3);
    ensure_facets(t);
    auto fp = fiber_product(t, SimplexProjection{2}, t, SimplexProjection{0});
    auto lifted = fiber_facet_candidates(fp);
    auto brute = enumerate_facets(fp.product);
    CHECK(lifted.size() == brute.size());
    CHECK(same_hyperplane_sets(fp.product, lifted, brute));
  }
}

TEST_CASE("valid non-facet inequalities are filtered out of the lift") {
  GroupSpec g({2});
  auto t = claw_polytope(g, 3);
  ensure_facets(t);
  auto fp = fiber_product(t, SimplexProjection{2}, t, SimplexProjection{0});
  auto baseline = fiber_facet_candidates(fp);
  // append a valid inequality that only supports a low-dimensional face
  auto& f0 = (*fp.factor1.facets)[0];
  auto& f1 = (*fp.factor1.facets)[1];
  Facet bogus;
  bogus.functional = f0.functional + f1.functional;
  bogus.rhs = f0.rhs + f1.rhs;
  bogus.normalizer = 1;
  fp.factor1.facets->push_back(bogus);
  auto padded = fiber_facet_candidates(fp);
  CHECK(padded.size() == baseline.size());
  CHECK(same_hyperplane_sets(fp.product, padded, baseline));
}

TEST_CASE("fiber products of Gorenstein tripods stay Gorenstein with the same index") {
  struct Case {
    std::vector<int> factors;
    Int index;
  };
  for (auto c : std::vector<Case>{{{3}, 3}, {{2}, 4}, {{2, 2}, 4}}) {
    GroupSpec g(c.factors);
    auto t = claw_polytope(g, 3);
    ensure_facets(t);
    auto rep = verify_fibgor(t, SimplexProjection{2}, t, SimplexProjection{0}, KernelBounds{},
                             /*normality_spot_k=*/0);
    CHECK(rep.hypotheses_ok);
    REQUIRE(rep.product.has_value());
    CHECK(rep.product->gorenstein);
    CHECK(rep.product->index == c.index);
    CHECK(rep.index_matches);
    CHECK(rep.interior_projects);
    if (c.factors == std::vector<int>{2, 2})
      CHECK(rep.cross_check_skipped);  // dimension 15 exceeds default bounds
    else
      CHECK(rep.facets_cross_checked);
  }
}

TEST_CASE("iterated gluing keeps the ternary index at three") {
  GroupSpec g({3});
  auto t = claw_polytope(g, 3);
  ensure_facets(t);
  auto first = verify_fibgor(t, SimplexProjection{2}, t, SimplexProjection{0}, KernelBounds{}, 0);
  REQUIRE(first.hypotheses_ok);
  auto four_leaf = first.fp->product;
  four_leaf.facets = first.fp->product.facets;
  auto second =
      verify_fibgor(four_leaf, SimplexProjection{0}, t, SimplexProjection{0}, KernelBounds{}, 0);
  CHECK(second.hypotheses_ok);
  REQUIRE(second.product.has_value());
  CHECK(second.product->gorenstein);
  CHECK(second.product->index == 3);
  CHECK(second.interior_projects);
  CHECK(second.cross_check_skipped);  // 14-dimensional product
}

TEST_CASE("direct tree route agrees with the fiber route on the four-leaf index") {
  // caterpillar built as a tree polytope, facets by brute enumeration
  Tree cat = Tree::parse("0 1\n0 2\n0 3\n1 4\n1 5\n");
  for (auto [factors, index] :
       std::vector<std::pair<std::vector<int>, Int>>{{{3}, 3}, {{2}, 4}}) {
    auto T = tree_polytope(GroupSpec(factors), cat);
    T.facets = enumerate_facets(T);
    auto rep = gorenstein_index(T);
    CHECK(rep.gorenstein);
    CHECK(rep.index == index);
  }
}

TEST_CASE("hypothesis violations are reported, not thrown") {
  // factors Gorenstein of different indices: ternary tripod (3) vs binary tripod (4)
  auto a = claw_polytope(GroupSpec({3}), 3);
  ensure_facets(a);
  auto b = claw_polytope(GroupSpec({3}), 4);
  ensure_facets(b);
  auto rep = verify_fibgor(a, SimplexProjection{0}, b, SimplexProjection{0}, KernelBounds{}, 0);
  CHECK_FALSE(rep.hypotheses_ok);
  CHECK_FALSE(rep.hypothesis_failure.empty());
  CHECK_FALSE(rep.product.has_value());
}
