#include "phylotope/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace phylotope {

std::vector<int> Polytope::labels(const LatticePoint& vertex) const {
  if (static_cast<int>(vertex.size()) != ambient_dim())
    throw std::invalid_argument("labels: dimension mismatch");
  std::vector<int> out(blocks, -1);
  const int s = block_size();
  for (int j = 0; j < blocks; ++j) {
    for (int g = 0; g < s; ++g) {
      Int v = vertex[coord(j, g)];
      if (v == 0) continue;
      if (v != 1 || out[j] != -1) throw std::invalid_argument("labels: not a 0/1 block vertex");
      out[j] = g;
    }
    if (out[j] == -1) throw std::invalid_argument("labels: empty block");
  }
  return out;
}

LatticePoint Polytope::vertex_from_labels(const std::vector<int>& lab) const {
  if (static_cast<int>(lab.size()) != blocks)
    throw std::invalid_argument("vertex_from_labels: wrong label count");
  LatticePoint v(ambient_dim(), 0);
  for (int j = 0; j < blocks; ++j) v[coord(j, lab[j])] = 1;
  return v;
}

int Polytope::vertex_index(const LatticePoint& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it != vertices.end() && *it == v) return static_cast<int>(it - vertices.begin());
  return -1;
}

std::optional<Int> Polytope::common_block_sum(const Coords& x) const {
  if (static_cast<int>(x.size()) != ambient_dim())
    throw std::invalid_argument("block sum: dimension mismatch");
  const int s = block_size();
  Int d = 0;
  for (int j = 0; j < blocks; ++j) {
    Int sum = 0;
    for (int g = 0; g < s; ++g) sum = checked_add(sum, x[coord(j, g)]);
    if (j == 0)
      d = sum;
    else if (sum != d)
      return std::nullopt;
  }
  return d;
}

Int Polytope::degree(const LatticePoint& x) const {
  for (Int v : x)
    if (v < 0) throw std::invalid_argument("degree: negative coordinate");
  auto d = common_block_sum(x);
  if (!d) throw std::invalid_argument("degree: unequal block sums");
  return *d;
}

void Polytope::check_vertex_invariants() const {
  for (const auto& v : vertices) {
    auto lab = labels(v);  // throws unless 0/1 with one 1 per block
    if (tree) {
      // labels around every internal node sum to the identity
      for (int node : tree->internal_nodes()) {
        int sum = 0;
        for (int j = 0; j < blocks; ++j) {
          auto& [a, b] = tree->edges[j];
          if (a == node || b == node) sum = group.add(sum, lab[j]);
        }
        if (sum != 0) throw std::logic_error("vertex labels do not cancel at an internal node");
      }
    }
  }
}

namespace {

Polytope finish_polytope(GroupSpec group, std::optional<Tree> tree, int blocks,
                         std::vector<LatticePoint> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  Polytope P{std::move(group), std::move(tree), blocks, std::move(vertices), {}, std::nullopt, ""};
  P.lattice = lattice_from_points(P.vertices);
  P.check_vertex_invariants();
  return P;
}

}  // namespace

Polytope claw_polytope(const GroupSpec& group, int m) {
  if (m < 2) throw std::invalid_argument("claw polytope needs m >= 2 edges");
  if (group.order() < 2) throw std::invalid_argument("claw polytope needs a nontrivial group");
  const int s = group.order();
  double count = 1;
  for (int i = 0; i < m - 1; ++i) count *= s;
  if (count > 2e6) throw std::invalid_argument("claw polytope: vertex count above supported bound");

  std::vector<LatticePoint> vertices;
  std::vector<int> lab(m, 0);
  // free labels on the first m-1 edges, last label balances the sum
  auto rec = [&](auto&& self, int j, int partial) -> void {
    if (j == m - 1) {
      lab[m - 1] = group.neg(partial);
      LatticePoint v(static_cast<std::size_t>(m) * s, 0);
      for (int i = 0; i < m; ++i) v[i * s + lab[i]] = 1;
      vertices.push_back(std::move(v));
      return;
    }
    for (int g = 0; g < s; ++g) {
      lab[j] = g;
      self(self, j + 1, group.add(partial, g));
    }
  };
  rec(rec, 0, 0);
  return finish_polytope(group, Tree::claw(m), m, std::move(vertices));
}

Polytope tree_polytope(const GroupSpec& group, const Tree& tree) {
  tree.validate();
  if (tree.edges.size() < 2) throw std::invalid_argument("tree polytope needs at least 2 edges");
  const int s = group.order();
  const int m = static_cast<int>(tree.edges.size());

  auto leaves = tree.leaves();
  double count = 1;
  for (std::size_t i = 0; i + 1 < leaves.size(); ++i) count *= s;
  if (count > 2e6) throw std::invalid_argument("tree polytope: vertex count above supported bound");

  // Root at the last leaf in id order; each non-root node then has a parent
  // edge, and the label of an internal node's parent edge is forced by the
  // zero-sum condition once all its child edges carry labels.
  const int root = leaves.back();
  std::map<int, std::vector<std::pair<int, int>>> adj;  // node -> (neighbor, block)
  for (int j = 0; j < m; ++j) {
    auto& [a, b] = tree.edges[j];
    adj[a].emplace_back(b, j);
    adj[b].emplace_back(a, j);
  }
  std::vector<int> free_blocks;      // leaf edges except the root's
  std::vector<int> post_order;       // internal nodes, children before parents
  std::map<int, int> parent_block;   // node -> block of edge toward root
  {
    std::vector<std::pair<int, int>> stack{{root, -1}};
    std::vector<std::pair<int, int>> visit_order;
    while (!stack.empty()) {
      auto [u, pb] = stack.back();
      stack.pop_back();
      visit_order.emplace_back(u, pb);
      for (auto [v, j] : adj[u])
        if (j != pb) stack.emplace_back(v, j);
    }
    for (auto it = visit_order.rbegin(); it != visit_order.rend(); ++it) {
      auto [u, pb] = *it;
      if (u == root) continue;
      parent_block[u] = pb;
      if (adj[u].size() == 1)
        free_blocks.push_back(pb);
      else
        post_order.push_back(u);
    }
  }
  std::sort(free_blocks.begin(), free_blocks.end());

  std::vector<LatticePoint> vertices;
  std::vector<int> lab(m, -1);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == free_blocks.size()) {
      for (int u : post_order) {
        int sum = 0;
        for (auto [v, j] : adj[u])
          if (j != parent_block[u]) sum = group.add(sum, lab[j]);
        lab[parent_block[u]] = group.neg(sum);
      }
      LatticePoint v(static_cast<std::size_t>(m) * s, 0);
      for (int j = 0; j < m; ++j) v[j * s + lab[j]] = 1;
      vertices.push_back(std::move(v));
      return;
    }
    for (int g = 0; g < s; ++g) {
      lab[free_blocks[i]] = g;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return finish_polytope(group, tree, m, std::move(vertices));
}

Polytope make_block_polytope(const GroupSpec& group, int blocks, std::vector<LatticePoint> vertices) {
  if (blocks < 1) throw std::invalid_argument("block polytope needs at least one block");
  if (vertices.empty()) throw std::invalid_argument("block polytope needs vertices");
  return finish_polytope(group, std::nullopt, blocks, std::move(vertices));
}

GPresentation to_g_presentation(const Polytope& P, const LatticePoint& x) {
  if (static_cast<int>(x.size()) != P.ambient_dim())
    throw std::invalid_argument("to_g_presentation: dimension mismatch");
  GPresentation p;
  p.multisets.resize(P.blocks);
  const int s = P.block_size();
  for (int j = 0; j < P.blocks; ++j)
    for (int g = 0; g < s; ++g) {
      Int mult = x[P.coord(j, g)];
      if (mult < 0) throw std::invalid_argument("to_g_presentation: negative multiplicity");
      for (Int c = 0; c < mult; ++c) p.multisets[j].push_back(g);
    }
  return p;
}

LatticePoint from_g_presentation(const Polytope& P, const GPresentation& p) {
  if (static_cast<int>(p.multisets.size()) != P.blocks)
    throw std::invalid_argument("from_g_presentation: wrong number of multisets");
  const std::size_t k = p.multisets.empty() ? 0 : p.multisets[0].size();
  LatticePoint x(P.ambient_dim(), 0);
  for (int j = 0; j < P.blocks; ++j) {
    if (p.multisets[j].size() != k)
      throw std::invalid_argument("from_g_presentation: multisets of unequal cardinality");
    for (int g : p.multisets[j]) {
      if (g < 0 || g >= P.block_size())
        throw std::invalid_argument("from_g_presentation: element index out of range");
      x[P.coord(j, g)] += 1;
    }
  }
  return x;
}

bool lattice_membership(const Polytope& P, const Coords& x) {
  auto d = P.common_block_sum(x);  // throws on dimension mismatch
  if (!d) return false;
  if (P.is_claw()) {
    // weighted element sum must vanish in G, factor by factor
    const auto& factors = P.group.factors();
    const int s = P.block_size();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Int n = factors[i];
      Int acc = 0;
      for (int j = 0; j < P.blocks; ++j)
        for (int g = 0; g < s; ++g) {
          Int r = P.group.element(g).residues[i];
          acc = (acc + (x[P.coord(j, g)] % n) * r) % n;
        }
      if ((acc % n + n) % n != 0) return false;
    }
    return true;
  }
  return P.lattice.contains(x, *d);
}

SymmetryAction SymmetryAction::h_action(const GroupSpec& g, std::vector<int> h) {
  int sum = 0;
  for (int e : h) {
    if (e < 0 || e >= g.order()) throw std::invalid_argument("H action: element index out of range");
    sum = g.add(sum, e);
  }
  if (sum != 0) throw std::invalid_argument("H action: tuple does not sum to the identity");
  SymmetryAction a;
  a.kind = Kind::H;
  a.h = std::move(h);
  return a;
}

SymmetryAction SymmetryAction::edge_perm(std::vector<int> sigma) {
  std::vector<char> seen(sigma.size(), 0);
  for (int v : sigma) {
    if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v])
      throw std::invalid_argument("edge permutation: not a permutation");
    seen[v] = 1;
  }
  SymmetryAction a;
  a.kind = Kind::EdgePerm;
  a.sigma = std::move(sigma);
  return a;
}

SymmetryAction SymmetryAction::automorphism(const GroupAutomorphism& phi) {
  SymmetryAction a;
  a.kind = Kind::Aut;
  a.aut = phi.images();
  return a;
}

SymmetryAction SymmetryAction::inverse(const GroupSpec& g) const {
  SymmetryAction a;
  a.kind = kind;
  switch (kind) {
    case Kind::H: {
      a.h.resize(h.size());
      for (std::size_t j = 0; j < h.size(); ++j) a.h[j] = g.neg(h[j]);
      break;
    }
    case Kind::EdgePerm: {
      a.sigma.resize(sigma.size());
      for (std::size_t j = 0; j < sigma.size(); ++j) a.sigma[sigma[j]] = static_cast<int>(j);
      break;
    }
    case Kind::Aut: {
      a.aut.resize(aut.size());
      for (std::size_t i = 0; i < aut.size(); ++i) a.aut[aut[i]] = static_cast<int>(i);
      break;
    }
  }
  return a;
}

bool SymmetryAction::is_identity() const {
  switch (kind) {
    case Kind::H:
      return std::all_of(h.begin(), h.end(), [](int e) { return e == 0; });
    case Kind::EdgePerm:
      for (std::size_t j = 0; j < sigma.size(); ++j)
        if (sigma[j] != static_cast<int>(j)) return false;
      return true;
    case Kind::Aut:
      for (std::size_t i = 0; i < aut.size(); ++i)
        if (aut[i] != static_cast<int>(i)) return false;
      return true;
  }
  return false;
}

LatticePoint apply_action(const Polytope& P, const SymmetryAction& a, const LatticePoint& x) {
  if (static_cast<int>(x.size()) != P.ambient_dim())
    throw std::invalid_argument("apply_action: dimension mismatch");
  const int s = P.block_size();
  LatticePoint y(x.size());
  switch (a.kind) {
    case SymmetryAction::Kind::H: {
      if (static_cast<int>(a.h.size()) != P.blocks)
        throw std::invalid_argument("apply_action: H tuple has wrong length");
      // (hx)_g^j = x_{g+h_j}^j
      for (int j = 0; j < P.blocks; ++j)
        for (int g = 0; g < s; ++g) y[P.coord(j, g)] = x[P.coord(j, P.group.add(g, a.h[j]))];
      break;
    }
    case SymmetryAction::Kind::EdgePerm: {
      if (static_cast<int>(a.sigma.size()) != P.blocks)
        throw std::invalid_argument("apply_action: permutation has wrong length");
      for (int j = 0; j < P.blocks; ++j)
        for (int g = 0; g < s; ++g) y[P.coord(a.sigma[j], g)] = x[P.coord(j, g)];
      break;
    }
    case SymmetryAction::Kind::Aut: {
      if (static_cast<int>(a.aut.size()) != s)
        throw std::invalid_argument("apply_action: automorphism over the wrong group");
      for (int j = 0; j < P.blocks; ++j)
        for (int g = 0; g < s; ++g) y[P.coord(j, a.aut[g])] = x[P.coord(j, g)];
      break;
    }
  }
  return y;
}

}  // namespace phylotope
