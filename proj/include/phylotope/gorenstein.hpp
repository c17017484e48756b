#pragma once

#include <string>

#include "phylotope/kernel.hpp"
#include "phylotope/normality.hpp"
#include "phylotope/polytope.hpp"

namespace phylotope {

// Closed-form facet description of the k-th dilation of the Kimura (Z2xZ2)
// m-claw polytope: 4m coordinate non-negativity facets plus, for every odd
// subset of the blocks and each pairing of the identity with one nonzero
// element, the subset inequality with right-hand side k. The subset facets
// have normalizer 2 over the vertex lattice. Requires m >= 3.
struct KimuraFacetSystem {
  int m = 0;
  Int k = 1;
  std::vector<Facet> facets;
  std::vector<BlockEquality> equalities;
};
KimuraFacetSystem kimura_facets(int m, Int k);

// Attaches the closed-form list (at k = 1), certifying every entry.
void attach_kimura_facets(Polytope& P);

struct GorensteinReport {
  std::string polytope_name;
  Int minimal_k = 0;         // first dilation with interior lattice points
  std::size_t interior_count = 0;
  std::optional<Coords> interior_point;  // when unique
  std::vector<Int> distances;            // per facet, when unique
  bool gorenstein = false;
  Int index = 0;        // = minimal_k when gorenstein
  std::string reason;   // explanation when not
  Int normality_checked_k = 0;  // spot-check depth (0 = skipped)
  bool normality_ok = true;
  bool normality_at_decisive = false;  // spot check reached the decisive level
};

// Scans k = 1..k_max for the first dilation with interior lattice points and
// decides there: Gorenstein exactly when the point is unique and at lattice
// distance 1 from every facet. A Gorenstein index can only live at that
// minimal k, so the verdict is complete. k_max defaults to dim(P)+1, which
// always contains interior points; if none are found the call errors out
// rather than guessing. normality_spot_k > 0 additionally brute-checks
// normality up to min(normality_spot_k, minimal_k).
GorensteinReport gorenstein_index(const Polytope& P, Int k_max = 0, Int normality_spot_k = 0);

}  // namespace phylotope
