#include <doctest.h>

#include <nlohmann/json.hpp>

#include "phylotope/json_io.hpp"

using namespace phylotope;

TEST_CASE("json shapes of the interchange formats") {
  GroupSpec g({2, 2});
  CHECK(to_json(g) == Json{{"factors", {2, 2}}});
  CHECK(group_from_json(Json::parse(R"({"factors":[2,2]})")) == g);

  GroupElement e{{1, 0}};
  CHECK(to_json(e) == Json{{"residues", {1, 0}}});

  auto P = claw_polytope(GroupSpec({2}), 3);
  Json pj = to_json(P);
  CHECK(pj["group"] == Json{{"factors", {2}}});
  CHECK(pj["tree"]["edges"] == Json::parse("[[0,1],[0,2],[0,3]]"));
  CHECK(pj["vertices"].size() == 4);

  Facet f{{1, 0, -1}, -1, 2};
  Json fj = to_json(f);
  CHECK(fj["functional"] == Json::parse("[1,0,-1]"));
  CHECK(fj["rhs"] == -1);
  CHECK(fj["normalizer"] == 2);

  auto a = SymmetryAction::h_action(GroupSpec({3}), {1, 2, 0});
  CHECK(to_json(a)["kind"] == "h");
  CHECK(to_json(SymmetryAction::edge_perm({1, 0}))["kind"] == "edge-perm");
}

TEST_CASE("ordered json keeps field order stable") {
  auto P = claw_polytope(GroupSpec({2}), 3);
  CHECK(to_json(P).dump() == to_json(P).dump());
  auto s = to_json(P).dump();
  CHECK(s.find("\"group\"") < s.find("\"tree\""));
  CHECK(s.find("\"tree\"") < s.find("\"vertices\""));
}
