#pragma once

#include "phylotope/gorenstein.hpp"
#include "phylotope/kernel.hpp"
#include "phylotope/polytope.hpp"

namespace phylotope {

// Projection of a block polytope onto one of its edge blocks; every vertex
// maps to a unit vector, i.e. to a vertex of the standard simplex on the
// block's coordinates.
struct SimplexProjection {
  int block = 0;
};

// Fiber product over the shared simplex: vertices are the compatible vertex
// pairs, written with the shared block once. Product block layout is
// (factor-1-only blocks, shared block, factor-2-only blocks).
struct FiberProduct {
  Polytope factor1, factor2;
  Polytope product;
  int m1 = 0, m2 = 0;
  int shared1 = 0, shared2 = 0;  // glued blocks in factor coordinates
  bool onto1 = false, onto2 = false;  // factor projections cover the whole simplex
  // set when both factors carry trees glued along leaf edges: the product was
  // verified to equal the polytope of the glued tree (up to block renaming)
  bool checked_against_glued_tree = false;

  int shared_block() const { return m1 - 1; }
  int product_block_of1(int j) const;
  int product_block_of2(int j) const;
  Coords phi1(const Coords& x) const;  // restriction to factor-1 coordinates
  Coords phi2(const Coords& x) const;
};

FiberProduct fiber_product(const Polytope& P1, SimplexProjection pi1, const Polytope& P2,
                           SimplexProjection pi2);

// Lifts every factor facet through the corresponding restriction map, filters
// by verify_facet on the product and drops duplicate supporting hyperplanes.
// Since every facet of the product is such a lift, the filtered list is the
// complete facet description whenever the factor lists are complete.
std::vector<Facet> fiber_facet_candidates(const FiberProduct& fp);

struct FibGorReport {
  GorensteinReport factor1, factor2;
  bool hypotheses_ok = false;
  std::string hypothesis_failure;
  std::optional<FiberProduct> fp;
  std::optional<GorensteinReport> product;
  bool index_matches = false;       // product index equals the common factor index
  bool interior_projects = false;   // product interior point restricts to the factor ones
  bool facets_cross_checked = false;
  bool cross_check_skipped = false; // enumeration beyond bounds, lift-filter trusted
};

// Checks the hypotheses (both factors Gorenstein of equal index, matching
// projected interior points), builds the product with its own vertex lattice
// and lifted facet list, and re-derives the Gorenstein data of the product.
// Hypothesis violations come back in the report, not as theorem failures.
FibGorReport verify_fibgor(const Polytope& P1, SimplexProjection pi1, const Polytope& P2,
                           SimplexProjection pi2, const KernelBounds& bounds = {},
                           Int normality_spot_k = 3);

}  // namespace phylotope
