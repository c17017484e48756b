#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phylotope/facet.hpp"
#include "phylotope/group.hpp"
#include "phylotope/lattice.hpp"
#include "phylotope/tree.hpp"

namespace phylotope {

// Non-negative integer point with one coordinate per (edge block, group
// element); block-major layout, elements within a block in enumeration order.
// The common per-block coordinate sum is the degree of the point.
using LatticePoint = Coords;

// The same point as a tuple of multisets of element indices, one multiset per
// edge block, each sorted ascending.
struct GPresentation {
  std::vector<std::vector<int>> multisets;

  friend bool operator==(const GPresentation&, const GPresentation&) = default;
};

// Vertex set, lattice and (optionally) verified facet data of a group-based
// model polytope, or of a fiber product of such. `tree` is present whenever
// the polytope was built from a tree; products built abstractly carry none.
struct Polytope {
  GroupSpec group;
  std::optional<Tree> tree;
  int blocks = 0;
  std::vector<LatticePoint> vertices;  // 0/1 points, one 1 per block, sorted
  LatticeData lattice;
  std::optional<std::vector<Facet>> facets;
  std::string facet_provenance;  // "closed-form", "enumerated", "lifted", ...

  int block_size() const { return group.order(); }
  int ambient_dim() const { return blocks * block_size(); }
  int coord(int block, int element) const { return block * block_size() + element; }
  bool is_claw() const { return tree && tree->is_claw(); }

  // Element index carrying the single 1 of each block of a vertex.
  std::vector<int> labels(const LatticePoint& vertex) const;
  LatticePoint vertex_from_labels(const std::vector<int>& labels) const;
  int vertex_index(const LatticePoint& v) const;  // -1 if not a vertex

  // Common per-block sum; error if blocks disagree or a coordinate is negative.
  Int degree(const LatticePoint& x) const;
  // Per-block sums equal (any signedness), as a precondition of lattice tests.
  std::optional<Int> common_block_sum(const Coords& x) const;

  void check_vertex_invariants() const;
};

Polytope claw_polytope(const GroupSpec& group, int m);
Polytope tree_polytope(const GroupSpec& group, const Tree& tree);
// Block-structured polytope without tree data (fiber products, test harnesses).
Polytope make_block_polytope(const GroupSpec& group, int blocks, std::vector<LatticePoint> vertices);

GPresentation to_g_presentation(const Polytope& P, const LatticePoint& x);
LatticePoint from_g_presentation(const Polytope& P, const GPresentation& p);

// Membership in the lattice generated by the vertices. Claw polytopes use the
// congruence description (equal block sums, element-weighted sum zero in G);
// everything else solves against the HNF basis. Both routes agree on claws.
bool lattice_membership(const Polytope& P, const Coords& x);

// The three symmetry actions. All are coordinate permutations of the ambient
// space: an H-tuple shifts each block by a group element (with zero total), an
// edge permutation moves whole blocks, an automorphism relabels coordinates
// inside every block.
struct SymmetryAction {
  enum class Kind { H, EdgePerm, Aut };
  Kind kind = Kind::H;
  std::vector<int> h;       // element index per block, indices summing to zero
  std::vector<int> sigma;   // sigma[j] = image block of block j
  std::vector<int> aut;     // automorphism image table over element indices

  static SymmetryAction h_action(const GroupSpec& g, std::vector<int> h);
  static SymmetryAction edge_perm(std::vector<int> sigma);
  static SymmetryAction automorphism(const GroupAutomorphism& phi);
  SymmetryAction inverse(const GroupSpec& g) const;
  bool is_identity() const;
};

LatticePoint apply_action(const Polytope& P, const SymmetryAction& a, const LatticePoint& x);

}  // namespace phylotope
