#include "phylotope/facet_sources.hpp"

#include <stdexcept>

#include "phylotope/gorenstein.hpp"
#include "phylotope/z3_toolkit.hpp"

namespace phylotope {

namespace {

bool has_closed_form(const Polytope& P) {
  if (!P.is_claw() || P.blocks < 3) return false;
  return P.group.factors() == std::vector<int>{3} || P.group.factors() == std::vector<int>{2, 2};
}

void attach_closed_form(Polytope& P) {
  if (P.group.factors() == std::vector<int>{3})
    attach_z3_facets(P);
  else
    attach_kimura_facets(P);
}

}  // namespace

void ensure_facets(Polytope& P, FacetMode mode, const KernelBounds& bounds) {
  switch (mode) {
    case FacetMode::Auto:
      if (P.facets) return;
      if (has_closed_form(P))
        attach_closed_form(P);
      else {
        P.facets = enumerate_facets(P, bounds);
        P.facet_provenance = "enumerated";
      }
      return;
    case FacetMode::ClosedForm:
      if (!has_closed_form(P))
        throw std::invalid_argument("no closed-form facet list for this polytope");
      attach_closed_form(P);
      return;
    case FacetMode::Brute:
      P.facets = enumerate_facets(P, bounds);
      P.facet_provenance = "enumerated";
      return;
    case FacetMode::CrossCheck: {
      auto brute = enumerate_facets(P, bounds);
      if (has_closed_form(P)) {
        attach_closed_form(P);
        if (!same_hyperplane_sets(P, *P.facets, brute))
          throw std::logic_error("closed-form and enumerated facet lists disagree");
        P.facet_provenance = "closed-form+cross-checked";
      } else {
        P.facets = brute;
        P.facet_provenance = "enumerated";
      }
      return;
    }
  }
}

}  // namespace phylotope
