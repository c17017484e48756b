#include <doctest.h>

#include <stdexcept>

#include "phylotope/tree.hpp"

using namespace phylotope;

TEST_CASE("claw trees") {
  Tree t = Tree::claw(3);
  CHECK(t.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(t.leaves() == std::vector<int>{1, 2, 3});
  CHECK(t.internal_nodes() == std::vector<int>{0});
  CHECK(t.is_claw());
  t.validate();
}

TEST_CASE("tree parsing and validation") {
  Tree t = Tree::parse("2 1\n0 2\n# comment\n");
  CHECK(t.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

  CHECK_THROWS_AS((Tree::parse("0 1\n1 2\n0 2\n")), std::invalid_argument);  // cycle
  CHECK_THROWS_AS((Tree::parse("0 1\n2 3\n")), std::invalid_argument);       // disconnected
  CHECK_THROWS_AS((Tree::parse("0 0\n")), std::invalid_argument);            // self loop
  CHECK_THROWS_AS((Tree::parse("")), std::invalid_argument);                 // no edges
}

TEST_CASE("glueing two tripods yields the four-leaf caterpillar") {
  Tree t1 = Tree::claw(3);
  Tree t2 = Tree::claw(3);
  auto glued = glue_trees(t1, 2, t2, 0);  // last edge of t1, first edge of t2
  glued.tree.validate();
  CHECK(glued.tree.edges.size() == 5);
  CHECK(glued.tree.leaves().size() == 4);
  CHECK(glued.tree.is_trivalent());
  CHECK_FALSE(glued.tree.is_claw());
  // the shared block maps both glue edges to the same glued block
  CHECK(glued.blocks_from1[2] == glued.shared_block);
  CHECK(glued.blocks_from2[0] == glued.shared_block);
  // every block of the glued tree is covered exactly once
  std::vector<int> seen(glued.tree.edges.size(), 0);
  for (int j = 0; j < 3; ++j) seen[glued.blocks_from1[j]]++;
  for (int j = 0; j < 3; ++j)
    if (j != 0) seen[glued.blocks_from2[j]]++;
  for (int c : seen) CHECK(c == 1);
}

TEST_CASE("glueing a third tripod yields a five-leaf trivalent tree") {
  auto four_leaf = glue_trees(Tree::claw(3), 2, Tree::claw(3), 0);
  // glue onto a leaf edge of the caterpillar
  int leaf_block = -1;
  for (int j = 0; j < static_cast<int>(four_leaf.tree.edges.size()); ++j)
    if (four_leaf.tree.is_leaf_edge(j)) {
      leaf_block = j;
      break;
    }
  auto five_leaf = glue_trees(four_leaf.tree, leaf_block, Tree::claw(3), 0);
  five_leaf.tree.validate();
  CHECK(five_leaf.tree.edges.size() == 7);
  CHECK(five_leaf.tree.leaves().size() == 5);
  CHECK(five_leaf.tree.is_trivalent());

  // only leaf edges can be glued
  int internal_block = -1;
  for (int j = 0; j < static_cast<int>(four_leaf.tree.edges.size()); ++j)
    if (!four_leaf.tree.is_leaf_edge(j)) internal_block = j;
  REQUIRE(internal_block >= 0);
  CHECK_THROWS_AS((glue_trees(four_leaf.tree, internal_block, Tree::claw(3), 0)),
                  std::invalid_argument);
}
