#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phylotope/polytope.hpp"

namespace phylotope {

// Outcome of checking a candidate inequality against a polytope. Certified
// means f(v) >= rhs holds on every vertex and the touching set is a genuine
// facet (affine dimension dim(P) - 1). Rejections keep the reason.
struct FacetCheck {
  enum class Status {
    Certified,
    Violated,       // f(v) < rhs for some vertex
    NotSupporting,  // valid but no vertex attains equality
    FaceTooSmall,   // touching set has affine dimension < dim(P) - 1
    WholePolytope,  // equality on an affine-hull-spanning set, not a facet
  };
  Status status = Status::Violated;
  std::optional<Facet> facet;       // set when certified (primitive, normalizer filled)
  std::vector<int> touching;        // vertex indices attaining equality
  int touching_dim = -1;
  std::string detail;

  bool certified() const { return status == Status::Certified; }
};

FacetCheck verify_facet(const Polytope& P, const Coords& functional, Int rhs);
// Same check against a bare point set (generic harness inputs).
FacetCheck verify_facet_points(const std::vector<Coords>& points, const LatticeData& lattice,
                               const Coords& functional, Int rhs);

struct KernelBounds {
  int max_vertices = 200;
  int max_dim = 12;
};

// Complete irredundant facet list via the double description method on the
// polar side: homogenize vertices, rewrite the polar cone in a lattice basis
// of the affine hull so it is pointed, run DD, pull extreme rays back and
// certify each with verify_facet. Deterministic output order.
std::vector<Facet> enumerate_facets(const Polytope& P, const KernelBounds& bounds = {});
std::vector<Facet> enumerate_facets_points(const std::vector<Coords>& points,
                                           const LatticeData& lattice,
                                           const KernelBounds& bounds = {});

// (f(x) - k * facet.rhs) / normalizer for x of degree k; errors unless x lies
// in the lattice and the division is exact.
Int lattice_distance(const Polytope& P, const LatticePoint& x, const Facet& facet);

// All lattice points of the k-th dilation (strict: interior side of every
// facet). Requires P.facets. Enumerates per-block compositions of k with
// branch-and-bound pruning on the facet partial sums, then filters by lattice
// membership. Output sorted lexicographically.
std::vector<LatticePoint> dilation_points(const Polytope& P, Int k, bool strict);

// Vertices joined to v by an edge of P, each with a certifying functional
// minimized exactly on {v, w} (the sum of all facets through both).
struct AdjacencyCertificate {
  LatticePoint neighbor;
  Coords functional;
  Int value;  // functional attains this exactly on {v, neighbor}
};
std::vector<AdjacencyCertificate> adjacent_vertices(const Polytope& P, const LatticePoint& v,
                                                    const KernelBounds& bounds = {});

// Facets of the k-th dilation (rhs scaled by k).
Facet dilate_facet(const Facet& f, Int k);

// Same supporting hyperplanes: equal touching-vertex sets, order-insensitive.
bool same_hyperplane_sets(const Polytope& P, const std::vector<Facet>& a,
                          const std::vector<Facet>& b);

}  // namespace phylotope
