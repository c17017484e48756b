#pragma once

#include <nlohmann/json_fwd.hpp>

#include "phylotope/fiber.hpp"
#include "phylotope/gorenstein.hpp"
#include "phylotope/normality.hpp"
#include "phylotope/polytope.hpp"
#include "phylotope/z3_toolkit.hpp"

// JSON views of the domain types. ordered_json keeps field order stable so
// identical runs produce byte-identical reports.
namespace phylotope {

using Json = nlohmann::ordered_json;

Json to_json(const GroupSpec& g);
Json to_json(const GroupElement& e);
Json to_json(const Tree& t);
Json to_json(const Polytope& P);
Json to_json(const Facet& f);
Json to_json(const SymmetryAction& a);
Json to_json(const GPresentation& p);
Json to_json(const DecompositionResult& r);
Json to_json(const WitnessReport& r);
Json to_json(const NormalityLevel& l);
Json to_json(const GorensteinReport& r);
Json to_json(const FibGorReport& r);

GroupSpec group_from_json(const Json& j);
Coords coords_from_json(const Json& j);

}  // namespace phylotope
