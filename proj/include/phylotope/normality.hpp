#pragma once

#include <cstdint>
#include <optional>

#include "phylotope/kernel.hpp"
#include "phylotope/polytope.hpp"

namespace phylotope {

// Result of the exhaustive search for a k-vertex sum. Indecomposable is only
// reported after the whole canonical search space was explored; the node count
// is the exhaustion certificate.
struct DecompositionResult {
  Coords point;
  Int k = 0;
  bool decomposable = false;
  std::vector<Coords> summands;
  std::uint64_t nodes_explored = 0;
};

// Depth-first search over G-presentations: pick one element per block forming
// a vertex (a zero-sum transversal), recurse on the remainder. Vertices are
// chosen in non-decreasing index order and remainders are memoized, so the
// search is canonical and complete. Preconditions: x is non-negative with all
// block sums k and lies in the vertex lattice; when facet data is attached the
// full membership x in kP is checked too.
DecompositionResult decompose_brute(const Polytope& P, const Coords& x, Int k);

struct NormalityLevel {
  Int k = 0;
  std::size_t point_count = 0;
  bool all_decompose = false;
  std::optional<Coords> witness;  // first indecomposable point, lex order
};

struct NormalityReport {
  std::vector<NormalityLevel> levels;
  bool normal_up_to_kmax = true;
};

// Enumerates kP cap L for each k <= k_max and brute-decomposes every point.
// Requires facet data; asserts first that the level-1 lattice points are
// exactly the vertex set, which licenses "sum of k vertices" as the target.
NormalityReport check_normality(const Polytope& P, Int k_max);

struct WitnessReport {
  GroupSpec group;
  Coords point;                               // the witness p
  bool in_lattice = false;                    // p in L
  bool in_dilation = false;                   // p in 4P, certified via 2p
  std::vector<Coords> doubled_decomposition;  // 8 vertices summing to 2p
  DecompositionResult verdict;                // brute search at k = 4
  std::vector<int> g, h;                      // chosen residues (empty for the Z2^n route)
};

// Indecomposability witness in the fourth dilation of the tripod polytope, for
// any even group of order >= 6. Groups with an element of order > 2 use the
// pair construction (g of order 2, 2h outside {0, g}); elementary abelian
// 2-groups embed the fixed three-multiset point through a Z2^3 subgroup.
// Membership of p in 4P is certified by exhibiting 2p as a sum of 8 vertices.
WitnessReport nonnormal_witness(const GroupSpec& group);

}  // namespace phylotope
