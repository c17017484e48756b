#include "phylotope/z3_toolkit.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "phylotope/normality.hpp"

namespace phylotope {

namespace {

void require_ternary_claw(const Polytope& P) {
  if (P.group.factors() != std::vector<int>{3})
    throw std::invalid_argument("ternary toolkit: polytope group must be Z3");
  if (!P.is_claw()) throw std::invalid_argument("ternary toolkit: polytope must be a claw");
}

// sorted-descending block triple, the key of the multiset order
std::array<Int, 3> block_key(const Polytope& P, const Coords& x, int j) {
  std::array<Int, 3> k{x[P.coord(j, 0)], x[P.coord(j, 1)], x[P.coord(j, 2)]};
  std::sort(k.begin(), k.end(), std::greater<>());
  return k;
}

int block_argmax_element(const Polytope& P, const Coords& x, int j) {
  Int mx = std::max({x[P.coord(j, 0)], x[P.coord(j, 1)], x[P.coord(j, 2)]});
  if (x[P.coord(j, 0)] == mx) return 0;  // ties resolve toward the identity
  return x[P.coord(j, 1)] == mx ? 1 : 2;
}

Coords special_vertex(const Polytope& P, int block_one, int block_two) {
  // label 1 on block_one, label 2 on block_two, label 0 elsewhere
  std::vector<int> lab(P.blocks, 0);
  lab[block_one] = 1;
  lab[block_two] = 2;
  return P.vertex_from_labels(lab);
}

}  // namespace

std::vector<std::vector<int>> z3_a_entries(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(m, 0);
  auto rec = [&](auto&& self, int j, int sum) -> void {
    if (j == m) {
      if (sum % 3 == 2) out.push_back(a);
      return;
    }
    for (int v = 0; v < 3; ++v) {
      a[j] = v;
      self(self, j + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

Z3FacetSystem z3_facet_list(int m, Int k) {
  if (m < 3) throw std::invalid_argument("closed-form facet list needs m >= 3");
  if (k < 1) throw std::invalid_argument("facet list: k must be >= 1");
  auto P = claw_polytope(GroupSpec({3}), m);  // provides the lattice for normalizers

  Z3FacetSystem sys;
  sys.m = m;
  sys.k = k;
  for (int j = 0; j < m; ++j)
    for (int g = 0; g < 3; ++g) {
      Facet f;
      f.functional.assign(3 * m, 0);
      f.functional[P.coord(j, g)] = 1;
      f.rhs = 0;
      f.normalizer = functional_lattice_gcd(f.functional, P.lattice);
      sys.facets.push_back(std::move(f));
    }
  for (int family = 1; family <= 2; ++family)
    for (const auto& a : z3_a_entries(m)) {
      Facet f;
      f.functional.assign(3 * m, 0);
      for (int j = 0; j < m; ++j)
        for (int g = 0; g < 3; ++g)
          f.functional[P.coord(j, g)] = family == 1 ? kZ3U[a[j]][g] : kZ3W[a[j]][g];
      f.rhs = checked_mul(2, k);
      f.normalizer = functional_lattice_gcd(f.functional, P.lattice);
      sys.facets.push_back(std::move(f));
    }
  for (int j = 0; j < m; ++j) {
    BlockEquality eq;
    eq.functional.assign(3 * m, 0);
    for (int g = 0; g < 3; ++g) eq.functional[P.coord(j, g)] = 1;
    eq.value = k;
    sys.equalities.push_back(std::move(eq));
  }
  return sys;
}

void attach_z3_facets(Polytope& P) {
  require_ternary_claw(P);
  auto sys = z3_facet_list(P.blocks, 1);
  std::vector<Facet> certified;
  certified.reserve(sys.facets.size());
  for (const auto& f : sys.facets) {
    auto check = verify_facet(P, f.functional, f.rhs);
    if (!check.certified())
      throw std::logic_error("closed-form ternary facet failed verification: " + check.detail);
    if (check.facet->normalizer != f.normalizer)
      throw std::logic_error("closed-form ternary facet normalizer mismatch");
    certified.push_back(*check.facet);
  }
  P.facets = std::move(certified);
  P.facet_provenance = "closed-form";
}

Int s_value(const Coords& x, const ATuple& A) {
  const int m = static_cast<int>(A.entries.size());
  if (static_cast<int>(x.size()) != 3 * m)
    throw std::invalid_argument("s_value: point and tuple lengths differ");
  if (A.family != 1 && A.family != 2) throw std::invalid_argument("s_value: family must be 1 or 2");
  Int s = 0;
  for (int j = 0; j < m; ++j) {
    int a = A.entries[j];
    if (a < 0 || a > 2) throw std::invalid_argument("s_value: tuple entry out of range");
    for (int g = 0; g < 3; ++g)
      s = checked_add(s, checked_mul(A.family == 1 ? kZ3U[a][g] : kZ3W[a][g], x[3 * j + g]));
  }
  return s;
}

std::optional<Z3Violation> z3_membership_violation(const Polytope& P, const Coords& x, Int k) {
  require_ternary_claw(P);
  if (static_cast<int>(x.size()) != P.ambient_dim())
    throw std::invalid_argument("membership: dimension mismatch");
  for (Int v : x)
    if (v < 0) return Z3Violation{"negative-coordinate", std::nullopt, v, 0};
  for (int j = 0; j < P.blocks; ++j) {
    Int sum = x[P.coord(j, 0)] + x[P.coord(j, 1)] + x[P.coord(j, 2)];
    if (sum != k) return Z3Violation{"block-sum", std::nullopt, sum, k};
  }
  if (!lattice_membership(P, x)) return Z3Violation{"lattice", std::nullopt, 0, 0};
  for (int family = 1; family <= 2; ++family)
    for (auto& a : z3_a_entries(P.blocks)) {
      ATuple A{a, family};
      Int s = s_value(x, A);
      if (s < 2 * k) return Z3Violation{"tuple-facet", A, s, 2 * k};
    }
  return std::nullopt;
}

Coords trace_apply(const Polytope& P, const std::vector<SymmetryAction>& actions, Coords x) {
  for (const auto& a : actions) x = apply_action(P, a, x);
  return x;
}

Coords trace_unapply(const Polytope& P, const std::vector<SymmetryAction>& actions, Coords x) {
  for (auto it = actions.rbegin(); it != actions.rend(); ++it)
    x = apply_action(P, it->inverse(P.group), x);
  return x;
}

NormalizationTrace normalize(const Polytope& P, const Coords& x, Int k) {
  require_ternary_claw(P);
  if (auto viol = z3_membership_violation(P, x, k))
    throw std::invalid_argument("normalize: point not in the dilation (" + viol->kind + ")");
  const int m = P.blocks;
  NormalizationTrace trace;
  trace.original = x;
  Coords y = x;

  // last block minimal in the multiset order; ties keep the lowest index
  int arg = 0;
  for (int j = 1; j < m; ++j)
    if (block_key(P, y, j) < block_key(P, y, arg)) arg = j;
  if (block_key(P, y, arg) < block_key(P, y, m - 1)) {
    std::vector<int> sigma(m);
    for (int j = 0; j < m; ++j) sigma[j] = j;
    std::swap(sigma[arg], sigma[m - 1]);
    auto action = SymmetryAction::edge_perm(sigma);
    y = apply_action(P, action, y);
    trace.actions.push_back(std::move(action));
  }

  // shift each of the first m-1 blocks so 0 carries a maximal multiplicity
  std::vector<int> h(m, 0);
  int sum = 0;
  for (int j = 0; j < m - 1; ++j) {
    h[j] = block_argmax_element(P, y, j);
    sum = P.group.add(sum, h[j]);
  }
  h[m - 1] = P.group.neg(sum);
  auto haction = SymmetryAction::h_action(P.group, h);
  if (!haction.is_identity()) {
    y = apply_action(P, haction, y);
    trace.actions.push_back(std::move(haction));
  }

  if (y[P.coord(m - 1, 1)] < y[P.coord(m - 1, 2)]) {
    auto flip = SymmetryAction::automorphism(GroupAutomorphism(P.group, {0, 2, 1}));
    y = apply_action(P, flip, y);
    trace.actions.push_back(std::move(flip));
  }

  for (int j = 0; j < m - 1; ++j) {
    if (block_key(P, y, m - 1) > block_key(P, y, j))
      throw std::logic_error("normalize: last block not minimal after permutation");
    if (y[P.coord(j, 0)] < std::max(y[P.coord(j, 1)], y[P.coord(j, 2)]))
      throw std::logic_error("normalize: zero not maximal after shift");
  }
  trace.normalized = std::move(y);
  return trace;
}

Z3Step z3_step(const Polytope& P, const Coords& x, Int k) {
  require_ternary_claw(P);
  if (k < 1) throw std::invalid_argument("step: k must be >= 1");
  if (auto viol = z3_membership_violation(P, x, k))
    throw std::invalid_argument("step: point not in the dilation (" + viol->kind + ")");
  const int m = P.blocks;

  if (k == 1) {
    // degree-1 lattice points of the dilation are vertices
    Z3Step st;
    st.vertex = x;
    st.rule = 0;
    return st;
  }

  auto finish = [&](Z3Step st) {
    Coords base = st.pre ? apply_action(P, *st.pre, x) : x;
    Coords rest(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) rest[i] = base[i] - st.vertex[i];
    for (Int v : rest)
      if (v < 0)
        throw z3_step_failure("step: chosen vertex is not x-good",
                              Z3Violation{"negative-coordinate", std::nullopt, v, 0});
    if (auto viol = z3_membership_violation(P, rest, k - 1))
      throw z3_step_failure("step: remainder left the dilation (" + viol->kind + ")", *viol);
    return st;
  };

  // Case 1: some H-shift makes 0 a maximal multiplicity element on every
  // block. Search the product of per-block argmax sets for a zero-sum tuple.
  {
    std::vector<std::vector<int>> argmax(m);
    for (int j = 0; j < m; ++j) {
      Int mx = std::max({x[P.coord(j, 0)], x[P.coord(j, 1)], x[P.coord(j, 2)]});
      for (int g = 0; g < 3; ++g)
        if (x[P.coord(j, g)] == mx) argmax[j].push_back(g);
    }
    std::vector<int> h(m, 0);
    bool found = false;
    auto rec = [&](auto&& self, int j, int sum) -> void {
      if (found) return;
      if (j == m) {
        found = sum == 0;
        return;
      }
      for (int g : argmax[j]) {
        h[j] = g;
        self(self, j + 1, P.group.add(sum, g));
        if (found) return;
      }
    };
    rec(rec, 0, 0);
    if (found) {
      Z3Step st;
      st.rule = 1;
      auto action = SymmetryAction::h_action(P.group, h);
      if (!action.is_identity()) st.pre = action;
      st.vertex = P.vertex_from_labels(std::vector<int>(m, 0));
      return finish(std::move(st));
    }
  }

  // The remaining cases need the normalized shape.
  for (int j = 0; j < m - 1; ++j)
    if (x[P.coord(j, 0)] < std::max(x[P.coord(j, 1)], x[P.coord(j, 2)]))
      throw std::invalid_argument("step: point not normalized (zero not maximal on a block)");
  if (x[P.coord(m - 1, 1)] < x[P.coord(m - 1, 2)])
    throw std::invalid_argument("step: point not normalized (last block order)");
  for (Int v : x)
    if (v >= k)
      throw std::invalid_argument("step: saturated coordinate, apply the block-drop reduction first");

  // Case 2: the last block still contains the identity.
  if (x[P.coord(m - 1, 0)] > 0) {
    Z3Step st;
    st.rule = 2;
    st.vertex = P.vertex_from_labels(std::vector<int>(m, 0));
    return finish(std::move(st));
  }

  // Case 3: x lies on a u-family tuple facet with entry sum 2 ending in 1.
  {
    std::vector<int> on;
    for (int j = 0; j < m - 1; ++j) {
      ATuple A;
      A.entries.assign(m, 0);
      A.entries[j] = 1;
      A.entries[m - 1] = 1;
      A.family = 1;
      if (s_value(x, A) == 2 * k) on.push_back(j);
    }
    if (on.size() > 1)
      throw z3_step_failure("step: point on two low tuple facets at once",
                            Z3Violation{"tuple-facet", std::nullopt, static_cast<Int>(on.size()), 1});
    if (on.size() == 1) {
      Z3Step st;
      st.rule = 3;
      st.vertex = special_vertex(P, m - 1, on[0]);  // label 1 on the last block, 2 on block j
      return finish(std::move(st));
    }
  }

  // Case 4: some earlier block has a positive 2-coordinate.
  for (int j = 0; j < m - 1; ++j)
    if (x[P.coord(j, 2)] > 0) {
      Z3Step st;
      st.rule = 4;
      st.vertex = special_vertex(P, m - 1, j);
      return finish(std::move(st));
    }

  // Case 5: all 2-coordinates vanish before the last block.
  Z3Step st;
  st.rule = 5;
  st.vertex = special_vertex(P, 0, m - 1);  // label 1 on the first block, 2 on the last
  return finish(std::move(st));
}

namespace {

Coords drop_block(const Polytope& P, const Coords& x, int block) {
  Coords out;
  out.reserve(x.size() - 3);
  for (int j = 0; j < P.blocks; ++j) {
    if (j == block) continue;
    for (int g = 0; g < 3; ++g) out.push_back(x[P.coord(j, g)]);
  }
  return out;
}

Coords insert_zero_block(const Coords& x, int block) {
  Coords out;
  out.reserve(x.size() + 3);
  int j = 0;
  for (std::size_t i = 0; i <= x.size(); i += 3, ++j) {
    if (j == block) {
      out.push_back(1);
      out.push_back(0);
      out.push_back(0);
    }
    if (i < x.size()) {
      out.push_back(x[i]);
      out.push_back(x[i + 1]);
      out.push_back(x[i + 2]);
    }
  }
  return out;
}

std::vector<Coords> z3_decompose_impl(const Polytope& P, const Coords& x, Int k) {
  const int m = P.blocks;
  if (k == 1) {
    P.labels(x);  // throws unless a 0/1 one-per-block point
    return {x};
  }
  if (m <= 2 || k <= 2) {
    auto res = decompose_brute(P, x, k);
    if (!res.decomposable)
      throw z3_step_failure("decompose: exhaustive base case found no decomposition",
                            Z3Violation{"lattice", std::nullopt, 0, 0});
    return res.summands;
  }

  auto trace = normalize(P, x, k);
  Coords y = trace.normalized;

  // Block-drop reduction: a block whose 0-coordinate is saturated forces the
  // identity label there in every summand.
  int saturated = -1;
  for (int j = 0; j < m && saturated < 0; ++j)
    if (y[P.coord(j, 0)] == k) saturated = j;
  std::vector<Coords> normalized_summands;
  if (saturated >= 0) {
    auto smaller = claw_polytope(P.group, m - 1);
    auto sub = z3_decompose_impl(smaller, drop_block(P, y, saturated), k);
    normalized_summands.reserve(sub.size());
    for (const auto& v : sub) normalized_summands.push_back(insert_zero_block(v, saturated));
  } else {
    auto st = z3_step(P, y, k);
    if (st.pre) {
      y = apply_action(P, *st.pre, y);
      trace.actions.push_back(*st.pre);
    }
    Coords rest = y - st.vertex;
    normalized_summands = z3_decompose_impl(P, rest, k - 1);
    normalized_summands.push_back(st.vertex);
  }

  std::vector<Coords> out;
  out.reserve(normalized_summands.size());
  for (const auto& v : normalized_summands) out.push_back(trace_unapply(P, trace.actions, v));
  return out;
}

}  // namespace

std::vector<Coords> z3_decompose(const Polytope& P, const Coords& x, Int k) {
  require_ternary_claw(P);
  if (k < 1) throw std::invalid_argument("decompose: k must be >= 1");
  if (auto viol = z3_membership_violation(P, x, k))
    throw std::invalid_argument("decompose: point not in the dilation (" + viol->kind + ")");
  auto out = z3_decompose_impl(P, x, k);
  if (static_cast<Int>(out.size()) != k)
    throw std::logic_error("decompose: wrong number of summands");
  Coords sum(x.size(), 0);
  for (const auto& v : out) {
    if (P.vertex_index(v) < 0) throw std::logic_error("decompose: summand is not a vertex");
    sum = sum + v;
  }
  if (sum != x) throw std::logic_error("decompose: summands do not re-sum to the input");
  return out;
}

std::vector<Coords> z3_special_vertices(const Polytope& P) {
  require_ternary_claw(P);
  const int m = P.blocks;
  std::vector<Coords> out;
  out.push_back(P.vertex_from_labels(std::vector<int>(m, 0)));
  for (int j = 0; j < m - 1; ++j) {
    out.push_back(special_vertex(P, j, m - 1));  // v(j, m)
    out.push_back(special_vertex(P, m - 1, j));  // v(m, j)
  }
  return out;
}

Coords z3_project(const Polytope& P, const Coords& x) {
  require_ternary_claw(P);
  Coords out;
  out.reserve(2 * P.blocks);
  for (int j = 0; j < P.blocks; ++j) {
    out.push_back(x[P.coord(j, 1)]);
    out.push_back(x[P.coord(j, 2)]);
  }
  return out;
}

}  // namespace phylotope
