#pragma once

#include <optional>

#include "phylotope/kernel.hpp"
#include "phylotope/polytope.hpp"

namespace phylotope {

// Index tuple selecting one weight vector per block. Entries in {0,1,2} with
// sum congruent to 2 mod 3; family 1 uses the u-vectors, family 2 the
// w-vectors.
struct ATuple {
  std::vector<int> entries;
  int family = 1;

  friend bool operator==(const ATuple&, const ATuple&) = default;
};

// Weight vectors over one 3-coordinate block (full-coordinate convention).
inline constexpr Int kZ3U[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
inline constexpr Int kZ3W[3][3] = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};

// All index tuples of length m (3^(m-1) of them), lexicographic.
std::vector<std::vector<int>> z3_a_entries(int m);

// Closed-form facet description of the k-th dilation of the ternary m-claw
// polytope: 3m coordinate non-negativity facets followed by the u-family and
// w-family tuple facets with right-hand side 2k, plus the per-block sum
// equalities. Requires m >= 3.
struct Z3FacetSystem {
  int m = 0;
  Int k = 1;
  std::vector<Facet> facets;
  std::vector<BlockEquality> equalities;
};
Z3FacetSystem z3_facet_list(int m, Int k);

// Attaches the closed-form list (at k = 1) to a ternary claw polytope after
// certifying every entry with verify_facet.
void attach_z3_facets(Polytope& P);

// Left side of the tuple inequality for x (3m coordinates).
Int s_value(const Coords& x, const ATuple& A);

// Membership of x in the k-th dilation (including the lattice); on failure
// reports the violated condition.
struct Z3Violation {
  std::string kind;  // "negative-coordinate", "block-sum", "lattice", "tuple-facet"
  std::optional<ATuple> tuple;
  Int value = 0;
  Int bound = 0;
};
std::optional<Z3Violation> z3_membership_violation(const Polytope& P, const Coords& x, Int k);

// Thrown when a constructive step would contradict the facet verification;
// carries the violated inequality as a counterexample report.
class z3_step_failure : public std::runtime_error {
public:
  z3_step_failure(std::string what, Z3Violation v)
      : std::runtime_error(std::move(what)), violation(std::move(v)) {}
  Z3Violation violation;
};

// Symmetry normalization of x in kP cap L: an edge permutation making the
// last block minimal in the multiset order, an H-shift making 0 a maximal
// multiplicity element on every block but the last, and the group
// automorphism enforcing x_1 >= x_2 on the last block. The trace is the exact
// action sequence applied, so it replays and inverts.
struct NormalizationTrace {
  std::vector<SymmetryAction> actions;
  Coords original;
  Coords normalized;
};
NormalizationTrace normalize(const Polytope& P, const Coords& x, Int k);

Coords trace_apply(const Polytope& P, const std::vector<SymmetryAction>& actions, Coords x);
Coords trace_unapply(const Polytope& P, const std::vector<SymmetryAction>& actions, Coords x);

// One constructive reduction step on a normalized point of kP cap L with all
// coordinates below k: picks a special vertex v (possibly after one extra
// H-shift, returned in `pre`) with x - v in (k-1)P cap L, verified against the
// dilated facet list before returning. `rule` records which case fired.
struct Z3Step {
  std::optional<SymmetryAction> pre;
  Coords vertex;
  int rule = 0;  // 1: zero-max shift, 2: last block meets 0, 3: tuple facet,
                 // 4: some x_2 positive, 5: fallback vertex
};
Z3Step z3_step(const Polytope& P, const Coords& x, Int k);

// Full constructive decomposition of x in kP cap L into k vertices summing to
// x: iterate normalize, the block-drop reduction when a block is saturated at
// its 0-coordinate, and z3_step; small cases fall through to the brute
// decomposer. Every subtraction is verified; failures propagate as
// z3_step_failure.
std::vector<Coords> z3_decompose(const Polytope& P, const Coords& x, Int k);

// The special vertex family: the all-zero vertex plus v(j,m) and v(m,j).
std::vector<Coords> z3_special_vertices(const Polytope& P);

// Projection onto the 2m coordinates of the nonzero elements.
Coords z3_project(const Polytope& P, const Coords& x);

}  // namespace phylotope
