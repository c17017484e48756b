#pragma once

#include <optional>
#include <vector>

#include "phylotope/checked.hpp"

namespace phylotope {

// Canonical row Hermite normal form of the integer span of the given vectors:
// echelon rows with positive pivots increasing left to right, entries above a
// pivot reduced into [0, pivot). Zero rows are dropped, so the result is a
// basis and is unique for the span.
std::vector<Coords> hnf(std::vector<Coords> rows);

// Rank of the linear span, via hnf.
int linear_rank(const std::vector<Coords>& rows);

// Dimension of the affine hull of a nonempty point set.
int affine_dim(const std::vector<Coords>& points);

// The lattice generated by a point set, stored as the HNF basis of the
// difference lattice plus one anchor point. Membership of a signed vector x is
// x = d * anchor + (difference-lattice element) where d is the common block
// degree of x.
struct LatticeData {
  std::vector<Coords> basis;  // HNF rows spanning the difference lattice
  std::vector<int> pivots;    // pivot column of each basis row
  Coords anchor;

  int rank() const { return static_cast<int>(basis.size()); }
  int ambient() const { return static_cast<int>(anchor.size()); }

  bool contains_difference(const Coords& x) const;
  // Integer coordinates of x over the basis, if x lies in the span.
  std::optional<Coords> solve_difference(const Coords& x) const;
  bool contains(const Coords& x, Int degree) const;
};

LatticeData lattice_from_points(const std::vector<Coords>& points);

// Positive generator of { f(u) - f(w) : u, w lattice points }, i.e. the gcd of
// f over the difference lattice. Returns 0 for functionals vanishing on it.
Int functional_lattice_gcd(const Coords& f, const LatticeData& lattice);

}  // namespace phylotope
