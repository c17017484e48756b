#include "phylotope/json_io.hpp"

#include <nlohmann/json.hpp>

namespace phylotope {

Json to_json(const GroupSpec& g) { return Json{{"factors", g.factors()}}; }

Json to_json(const GroupElement& e) { return Json{{"residues", e.residues}}; }

Json to_json(const Tree& t) {
  Json edges = Json::array();
  for (auto& [a, b] : t.edges) edges.push_back(Json::array({a, b}));
  return Json{{"edges", edges}};
}

Json to_json(const Polytope& P) {
  Json j;
  j["group"] = to_json(P.group);
  if (P.tree) j["tree"] = to_json(*P.tree);
  j["blocks"] = P.blocks;
  j["vertices"] = P.vertices;
  return j;
}

Json to_json(const Facet& f) {
  return Json{{"functional", f.functional}, {"rhs", f.rhs}, {"normalizer", f.normalizer}};
}

Json to_json(const SymmetryAction& a) {
  switch (a.kind) {
    case SymmetryAction::Kind::H:
      return Json{{"kind", "h"}, {"elements", a.h}};
    case SymmetryAction::Kind::EdgePerm:
      return Json{{"kind", "edge-perm"}, {"sigma", a.sigma}};
    case SymmetryAction::Kind::Aut:
      return Json{{"kind", "automorphism"}, {"images", a.aut}};
  }
  return {};
}

Json to_json(const GPresentation& p) { return Json{{"multisets", p.multisets}}; }

Json to_json(const DecompositionResult& r) {
  Json j;
  j["point"] = r.point;
  j["k"] = r.k;
  j["decomposable"] = r.decomposable;
  if (r.decomposable) j["vertices"] = r.summands;
  j["nodes_explored"] = r.nodes_explored;
  return j;
}

Json to_json(const WitnessReport& r) {
  Json j;
  j["group"] = to_json(r.group);
  j["point"] = r.point;
  if (!r.g.empty()) {
    j["g"] = r.g;
    j["h"] = r.h;
  }
  j["in_lattice"] = r.in_lattice;
  j["in_fourth_dilation"] = r.in_dilation;
  j["doubled_decomposition"] = r.doubled_decomposition;
  j["decomposable_into_4"] = r.verdict.decomposable;
  j["search_nodes"] = r.verdict.nodes_explored;
  return j;
}

Json to_json(const NormalityLevel& l) {
  Json j;
  j["k"] = l.k;
  j["points"] = l.point_count;
  j["all_decompose"] = l.all_decompose;
  if (l.witness) j["witness"] = *l.witness;
  return j;
}

Json to_json(const GorensteinReport& r) {
  Json j;
  j["polytope"] = r.polytope_name;
  j["minimal_k"] = r.minimal_k;
  j["interior_count"] = r.interior_count;
  if (r.interior_point) j["interior_point"] = *r.interior_point;
  if (!r.distances.empty()) j["distances"] = r.distances;
  j["verdict"] = r.gorenstein ? "Gorenstein" : "NotGorenstein";
  if (r.gorenstein)
    j["index"] = r.index;
  else
    j["reason"] = r.reason;
  if (r.normality_checked_k > 0) {
    j["normality_checked_k"] = r.normality_checked_k;
    j["normality_ok"] = r.normality_ok;
    j["normality_at_decisive"] = r.normality_at_decisive;
  }
  return j;
}

Json to_json(const FibGorReport& r) {
  Json j;
  j["factor1"] = to_json(r.factor1);
  j["factor2"] = to_json(r.factor2);
  j["hypotheses_ok"] = r.hypotheses_ok;
  if (!r.hypotheses_ok) {
    j["hypothesis_failure"] = r.hypothesis_failure;
    return j;
  }
  j["product"] = to_json(*r.product);
  j["index_matches"] = r.index_matches;
  j["interior_projects"] = r.interior_projects;
  j["facets_cross_checked"] = r.facets_cross_checked;
  j["cross_check_skipped"] = r.cross_check_skipped;
  return j;
}

GroupSpec group_from_json(const Json& j) {
  return GroupSpec(j.at("factors").get<std::vector<int>>());
}

Coords coords_from_json(const Json& j) { return j.get<Coords>(); }

}  // namespace phylotope
