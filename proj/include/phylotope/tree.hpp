#pragma once

#include <string>
#include <utility>
#include <vector>

namespace phylotope {

// Leaf-labelled tree on integer node ids. Edges are stored as (min, max)
// pairs sorted lexicographically; that order is fixed and defines the ambient
// coordinate block order of every polytope built on the tree.
struct Tree {
  std::vector<std::pair<int, int>> edges;

  static Tree claw(int m);  // center 0, leaves 1..m
  // One edge "a b" per line; '#' starts a comment.
  static Tree parse(const std::string& text);
  std::string format() const;

  // Throws unless connected and acyclic with at least one edge.
  void validate() const;

  std::vector<int> nodes() const;
  int degree(int node) const;
  std::vector<int> leaves() const;
  std::vector<int> internal_nodes() const;
  bool is_leaf_edge(int block) const;
  bool is_claw() const;
  bool is_trivalent() const;  // every internal node has degree 3

  friend bool operator==(const Tree&, const Tree&) = default;
};

// Grafts t2 onto t1 by identifying leaf edge `block1` of t1 with leaf edge
// `block2` of t2: the two edges become one shared edge joining the interior
// endpoints. t2's nodes are renamed past t1's maximum id.
struct GluedTree {
  Tree tree;
  int shared_block;               // block index of the identified edge in `tree`
  std::vector<int> blocks_from1;  // glued block index of each t1 block
  std::vector<int> blocks_from2;  // glued block index of each t2 block
};
GluedTree glue_trees(const Tree& t1, int block1, const Tree& t2, int block2);

}  // namespace phylotope
