#include "phylotope/normality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "phylotope/parallel.hpp"

namespace phylotope {

namespace {

struct BruteSearch {
  const Polytope& P;
  const std::vector<std::vector<int>>& vertex_labels;
  std::map<std::pair<Coords, int>, bool> memo;
  std::uint64_t nodes = 0;
  std::vector<int> chosen;

  bool run(Coords& rest, Int k, int min_vertex) {
    ++nodes;
    if (k == 0) return true;
    auto key = std::make_pair(rest, min_vertex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (int vi = min_vertex; vi < static_cast<int>(P.vertices.size()) && !ok; ++vi) {
      const auto& lab = vertex_labels[vi];
      bool usable = true;
      for (int j = 0; j < P.blocks && usable; ++j)
        if (rest[P.coord(j, lab[j])] == 0) usable = false;
      if (!usable) continue;
      for (int j = 0; j < P.blocks; ++j) rest[P.coord(j, lab[j])] -= 1;
      if (run(rest, k - 1, vi)) {
        chosen.push_back(vi);
        ok = true;
      }
      for (int j = 0; j < P.blocks; ++j) rest[P.coord(j, lab[j])] += 1;
    }
    memo.emplace(std::move(key), ok);
    return ok;
  }
};

}  // namespace

DecompositionResult decompose_brute(const Polytope& P, const Coords& x, Int k) {
  if (k < 1) throw std::invalid_argument("decompose_brute: k must be >= 1");
  for (Int v : x)
    if (v < 0) throw std::invalid_argument("decompose_brute: point not in k-th dilation (negative coordinate)");
  if (P.common_block_sum(x) != std::optional<Int>(k))
    throw std::invalid_argument("decompose_brute: block sums differ from k");
  if (!lattice_membership(P, x))
    throw std::invalid_argument("decompose_brute: point not in the vertex lattice");
  if (P.facets) {
    for (const auto& f : *P.facets)
      if (f.eval(x) < checked_mul(k, f.rhs))
        throw std::invalid_argument("decompose_brute: point not in the k-th dilation");
  }

  std::vector<std::vector<int>> labels;
  labels.reserve(P.vertices.size());
  for (const auto& v : P.vertices) labels.push_back(P.labels(v));

  DecompositionResult out;
  out.point = x;
  out.k = k;
  BruteSearch search{P, labels, {}, 0, {}};
  Coords rest = x;
  out.decomposable = search.run(rest, k, 0);
  out.nodes_explored = search.nodes;
  if (out.decomposable) {
    std::reverse(search.chosen.begin(), search.chosen.end());
    Coords sum(x.size(), 0);
    for (int vi : search.chosen) {
      out.summands.push_back(P.vertices[vi]);
      sum = sum + P.vertices[vi];
    }
    if (sum != x) throw std::logic_error("decompose_brute: summands do not re-sum to the input");
  }
  return out;
}

NormalityReport check_normality(const Polytope& P, Int k_max) {
  if (!P.facets) throw std::invalid_argument("check_normality: facet data required");
  if (k_max < 1) throw std::invalid_argument("check_normality: k_max must be >= 1");
  // Level-1 lattice points must be exactly the vertices for "sum of k
  // vertices" to coincide with the usual normality condition.
  if (dilation_points(P, 1, false) != P.vertices)
    throw std::logic_error("check_normality: level-1 lattice points differ from the vertex set");

  NormalityReport report;
  for (Int k = 1; k <= k_max; ++k) {
    auto points = dilation_points(P, k, false);
    std::vector<char> bad(points.size(), 0);
    parallel_for(points.size(), [&](std::size_t i) {
      bad[i] = !decompose_brute(P, points[i], k).decomposable;
    });
    NormalityLevel level;
    level.k = k;
    level.point_count = points.size();
    level.all_decompose = true;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (bad[i]) {
        level.all_decompose = false;
        level.witness = points[i];
        break;
      }
    if (!level.all_decompose) report.normal_up_to_kmax = false;
    report.levels.push_back(std::move(level));
  }
  return report;
}

WitnessReport nonnormal_witness(const GroupSpec& group) {
  const int n = group.order();
  if (n % 2 != 0 || n < 6)
    throw std::invalid_argument(
        "nonnormal_witness: construction needs an even group with at least 6 elements");

  auto P = claw_polytope(group, 3);
  WitnessReport rep{group, {}, false, false, {}, {}, {}, {}};

  const bool elementary_2group =
      std::all_of(group.factors().begin(), group.factors().end(), [](int f) { return f == 2; });

  GPresentation pres;
  std::vector<std::vector<int>> doubled_labels;  // label triples summing to 2p
  if (!elementary_2group) {
    // g of order two and h with 2h outside {0, g}; first such pair in
    // enumeration order.
    int g = -1, h = -1;
    for (int cg = 1; cg < n && g < 0; ++cg) {
      if (group.add(cg, cg) != 0) continue;
      for (int ch = 0; ch < n; ++ch) {
        int hh = group.add(ch, ch);
        if (hh != 0 && hh != cg) {
          g = cg;
          h = ch;
          break;
        }
      }
    }
    if (g < 0) throw std::logic_error("nonnormal_witness: no admissible pair found");
    rep.g = group.element(g).residues;
    rep.h = group.element(h).residues;
    const int gh = group.add(g, h);
    const int m2h = group.neg(group.add(h, h));     // -2h
    const int gm2h = group.add(g, m2h);             // g - 2h
    pres.multisets = {{0, g, h, gh}, {0, g, h, gh}, {0, g, m2h, gm2h}};
    for (auto& ms : pres.multisets) std::sort(ms.begin(), ms.end());
    doubled_labels = {{0, 0, 0},    {g, g, 0},   {g, 0, g},    {0, g, g},
                      {h, h, m2h},  {gh, gh, m2h}, {gh, h, gm2h}, {h, gh, gm2h}};
  } else {
    // embed the three fixed multisets of the Z2^3 point through the subgroup
    // generated by the first three factors
    auto embed = [&](int a, int b, int c) {
      GroupElement e;
      e.residues.assign(group.factors().size(), 0);
      e.residues[0] = a;
      e.residues[1] = b;
      e.residues[2] = c;
      return group.index(e);
    };
    pres.multisets = {
        {embed(0, 0, 0), embed(0, 0, 1), embed(1, 0, 0), embed(1, 0, 1)},
        {embed(0, 0, 0), embed(0, 0, 1), embed(0, 1, 0), embed(0, 1, 1)},
        {embed(0, 0, 0), embed(0, 0, 1), embed(1, 1, 0), embed(1, 1, 1)}};
    for (auto& ms : pres.multisets) std::sort(ms.begin(), ms.end());
  }

  rep.point = from_g_presentation(P, pres);
  rep.in_lattice = lattice_membership(P, rep.point);

  Coords doubled = 2 * rep.point;
  if (!doubled_labels.empty()) {
    Coords sum(P.ambient_dim(), 0);
    for (const auto& lab : doubled_labels) {
      if (group.add(group.add(lab[0], lab[1]), lab[2]) != 0)
        throw std::logic_error("nonnormal_witness: doubled summand is not a vertex");
      auto v = P.vertex_from_labels(lab);
      rep.doubled_decomposition.push_back(v);
      sum = sum + v;
    }
    if (sum != doubled) throw std::logic_error("nonnormal_witness: doubled decomposition mismatch");
  } else {
    auto dec = decompose_brute(P, doubled, 8);
    if (!dec.decomposable)
      throw std::logic_error("nonnormal_witness: doubled point did not decompose");
    rep.doubled_decomposition = dec.summands;
  }
  rep.in_dilation = true;  // 2p in 8P certified above, hence p in 4P

  rep.verdict = decompose_brute(P, rep.point, 4);
  return rep;
}

}  // namespace phylotope
