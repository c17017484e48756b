#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace phylotope {

// One verification inside a replay suite.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// The theorem-replay suites exposed by the CLI and driven by the acceptance
// binary. Every suite recomputes from scratch; none depends on another.
SuiteResult replay_vertex_fidelity();         // vertex sets and counts of small claws
SuiteResult replay_facets_z3();               // closed-form vs brute-force ternary facets
SuiteResult replay_vert0();                   // neighbors of the zero vertex, ternary claws
SuiteResult replay_notnormal();               // indecomposability witnesses, even groups
SuiteResult replay_gore();                    // Gorenstein indices of the small claws
SuiteResult replay_fibgor();                  // fiber products of Gorenstein tripods
SuiteResult replay_normalz3();                // exhaustive ternary normality + constructive decomposition
SuiteResult replay_lemma2();                  // tuple-value congruence over whole dilations
SuiteResult replay_properties(std::uint64_t seed);  // randomized invariants, fixed seed

SuiteResult run_replay(const std::string& name, std::uint64_t seed);
std::vector<std::string> replay_names();

}  // namespace phylotope
