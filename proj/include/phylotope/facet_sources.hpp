#pragma once

#include "phylotope/kernel.hpp"
#include "phylotope/polytope.hpp"

namespace phylotope {

enum class FacetMode { Auto, ClosedForm, Brute, CrossCheck };

// Populates P.facets. Auto prefers a closed-form list (ternary and Kimura
// claws) and enumerates otherwise; CrossCheck computes both and requires them
// to agree as supporting hyperplane sets.
void ensure_facets(Polytope& P, FacetMode mode = FacetMode::Auto, const KernelBounds& bounds = {});

}  // namespace phylotope
