#include "phylotope/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace phylotope {

Tree Tree::claw(int m) {
  if (m < 1) throw std::invalid_argument("claw tree needs at least one edge");
  Tree t;
  for (int i = 1; i <= m; ++i) t.edges.emplace_back(0, i);
  return t;
}

Tree Tree::parse(const std::string& text) {
  Tree t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw std::invalid_argument("tree file: edge line with a single endpoint");
    if (a == b) throw std::invalid_argument("tree file: self-loop edge");
    t.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(t.edges.begin(), t.edges.end());
  t.validate();
  return t;
}

std::string Tree::format() const {
  std::ostringstream os;
  for (auto& [a, b] : edges) os << a << " " << b << "\n";
  return os.str();
}

void Tree::validate() const {
  if (edges.empty()) throw std::invalid_argument("invalid tree: no edges");
  std::set<std::pair<int, int>> seen;
  std::map<int, std::vector<int>> adj;
  for (auto& [a, b] : edges) {
    if (a >= b) throw std::invalid_argument("invalid tree: edges must be stored as (min,max)");
    if (!seen.insert({a, b}).second) throw std::invalid_argument("invalid tree: duplicate edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (!std::is_sorted(edges.begin(), edges.end()))
    throw std::invalid_argument("invalid tree: edges must be sorted");
  if (adj.size() != edges.size() + 1) throw std::invalid_argument("invalid tree: not acyclic");
  // connectivity by BFS from the first node
  std::set<int> visited;
  std::vector<int> stack{adj.begin()->first};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (!visited.insert(u).second) continue;
    for (int v : adj[u]) stack.push_back(v);
  }
  if (visited.size() != adj.size()) throw std::invalid_argument("invalid tree: not connected");
}

std::vector<int> Tree::nodes() const {
  std::set<int> s;
  for (auto& [a, b] : edges) {
    s.insert(a);
    s.insert(b);
  }
  return {s.begin(), s.end()};
}

int Tree::degree(int node) const {
  int d = 0;
  for (auto& [a, b] : edges)
    if (a == node || b == node) ++d;
  return d;
}

std::vector<int> Tree::leaves() const {
  std::vector<int> out;
  for (int n : nodes())
    if (degree(n) == 1) out.push_back(n);
  return out;
}

std::vector<int> Tree::internal_nodes() const {
  std::vector<int> out;
  for (int n : nodes())
    if (degree(n) > 1) out.push_back(n);
  return out;
}

bool Tree::is_leaf_edge(int block) const {
  auto& [a, b] = edges.at(block);
  return degree(a) == 1 || degree(b) == 1;
}

bool Tree::is_claw() const {
  if (edges.size() == 1) return true;
  int center = -1;
  for (int n : nodes())
    if (degree(n) == static_cast<int>(edges.size())) center = n;
  if (center < 0) return false;
  for (auto& [a, b] : edges)
    if (a != center && b != center) return false;
  return true;
}

bool Tree::is_trivalent() const {
  for (int n : internal_nodes())
    if (degree(n) != 3) return false;
  return true;
}

GluedTree glue_trees(const Tree& t1, int block1, const Tree& t2, int block2) {
  t1.validate();
  t2.validate();
  if (block1 < 0 || block1 >= static_cast<int>(t1.edges.size()) || block2 < 0 ||
      block2 >= static_cast<int>(t2.edges.size()))
    throw std::out_of_range("glue_trees: block index out of range");
  if (!t1.is_leaf_edge(block1) || !t2.is_leaf_edge(block2))
    throw std::invalid_argument("glue_trees: both glue edges must be leaf edges");

  auto interior_end = [](const Tree& t, int block) {
    auto [a, b] = t.edges[block];
    // For a single-edge tree both ends are leaves; keep the smaller id.
    if (t.degree(a) == 1 && t.degree(b) > 1) return b;
    return a;
  };
  int u1 = interior_end(t1, block1);
  int u2 = interior_end(t2, block2);

  int max1 = 0;
  for (int n : t1.nodes()) max1 = std::max(max1, n);
  const int shift = max1 + 1;

  GluedTree out;
  std::vector<std::pair<int, int>> raw;  // edge per source block, before sorting
  std::vector<std::pair<int, int>> src;  // (factor, block)
  for (int j = 0; j < static_cast<int>(t1.edges.size()); ++j) {
    if (j == block1)
      raw.emplace_back(std::min(u1, u2 + shift), std::max(u1, u2 + shift));
    else
      raw.push_back(t1.edges[j]);
    src.emplace_back(1, j);
  }
  for (int j = 0; j < static_cast<int>(t2.edges.size()); ++j) {
    if (j == block2) continue;
    auto [a, b] = t2.edges[j];
    raw.emplace_back(std::min(a + shift, b + shift), std::max(a + shift, b + shift));
    src.emplace_back(2, j);
  }

  std::vector<int> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return raw[a] < raw[b]; });

  out.blocks_from1.assign(t1.edges.size(), -1);
  out.blocks_from2.assign(t2.edges.size(), -1);
  out.tree.edges.resize(raw.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    int i = order[pos];
    out.tree.edges[pos] = raw[i];
    auto [factor, block] = src[i];
    if (factor == 1) {
      out.blocks_from1[block] = static_cast<int>(pos);
      if (block == block1) out.shared_block = static_cast<int>(pos);
    } else {
      out.blocks_from2[block] = static_cast<int>(pos);
    }
  }
  out.blocks_from2[block2] = out.shared_block;
  out.tree.validate();
  return out;
}

}  // namespace phylotope
