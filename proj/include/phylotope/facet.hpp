#pragma once

#include "phylotope/checked.hpp"

namespace phylotope {

// Valid inequality f(x) >= rhs on a polytope, with rhs stated for the
// undilated polytope unless noted otherwise; on the k-th dilation the bound is
// k * rhs. The functional is primitive over the ambient integers. normalizer
// is the positive generator of f over the difference lattice, so lattice
// distances are (f(x) - k * rhs) / normalizer.
struct Facet {
  Coords functional;
  Int rhs = 0;
  Int normalizer = 1;

  Int eval(const Coords& x) const { return dot(functional, x); }

  friend bool operator==(const Facet&, const Facet&) = default;
};

// Affine-hull equality f(x) = value (value stated per unit dilation).
struct BlockEquality {
  Coords functional;
  Int value = 0;
};

}  // namespace phylotope
