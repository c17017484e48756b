#include "phylotope/fiber.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace phylotope {

int FiberProduct::product_block_of1(int j) const {
  if (j == shared1) return shared_block();
  return j < shared1 ? j : j - 1;
}

int FiberProduct::product_block_of2(int j) const {
  if (j == shared2) return shared_block();
  return m1 + (j < shared2 ? j : j - 1);
}

namespace {

Coords restrict_blocks(const Coords& x, int s, const std::vector<int>& product_blocks) {
  Coords out;
  out.reserve(product_blocks.size() * s);
  for (int pb : product_blocks)
    for (int g = 0; g < s; ++g) out.push_back(x[pb * s + g]);
  return out;
}

}  // namespace

Coords FiberProduct::phi1(const Coords& x) const {
  std::vector<int> blocks(m1);
  for (int j = 0; j < m1; ++j) blocks[j] = product_block_of1(j);
  return restrict_blocks(x, product.block_size(), blocks);
}

Coords FiberProduct::phi2(const Coords& x) const {
  std::vector<int> blocks(m2);
  for (int j = 0; j < m2; ++j) blocks[j] = product_block_of2(j);
  return restrict_blocks(x, product.block_size(), blocks);
}

FiberProduct fiber_product(const Polytope& P1, SimplexProjection pi1, const Polytope& P2,
                           SimplexProjection pi2) {
  if (!(P1.group == P2.group))
    throw std::invalid_argument("fiber product: factors must share one group (equal block size)");
  if (pi1.block < 0 || pi1.block >= P1.blocks || pi2.block < 0 || pi2.block >= P2.blocks)
    throw std::out_of_range("fiber product: projection block out of range");
  const int s = P1.block_size();

  FiberProduct fp;
  fp.m1 = P1.blocks;
  fp.m2 = P2.blocks;
  fp.shared1 = pi1.block;
  fp.shared2 = pi2.block;

  // group factor-2 vertices by their shared-block label
  std::map<int, std::vector<const Coords*>> by_label;
  std::set<int> image1, image2;
  for (const auto& v : P2.vertices) {
    int lab = P2.labels(v)[pi2.block];
    by_label[lab].push_back(&v);
    image2.insert(lab);
  }

  std::vector<Coords> vertices;
  for (const auto& v1 : P1.vertices) {
    int lab = P1.labels(v1)[pi1.block];
    image1.insert(lab);
    auto it = by_label.find(lab);
    if (it == by_label.end()) continue;
    for (const Coords* v2 : it->second) {
      Coords v;
      v.reserve(static_cast<std::size_t>(fp.m1 + fp.m2 - 1) * s);
      for (int j = 0; j < fp.m1; ++j) {
        if (j == fp.shared1) continue;
        for (int g = 0; g < s; ++g) v.push_back(v1[P1.coord(j, g)]);
      }
      for (int g = 0; g < s; ++g) v.push_back(v1[P1.coord(fp.shared1, g)]);
      for (int j = 0; j < fp.m2; ++j) {
        if (j == fp.shared2) continue;
        for (int g = 0; g < s; ++g) v.push_back((*v2)[P2.coord(j, g)]);
      }
      vertices.push_back(std::move(v));
    }
  }
  if (vertices.empty()) throw std::invalid_argument("fiber product: no compatible vertex pairs");
  fp.onto1 = static_cast<int>(image1.size()) == s;
  fp.onto2 = static_cast<int>(image2.size()) == s;
  fp.product = make_block_polytope(P1.group, fp.m1 + fp.m2 - 1, std::move(vertices));
  fp.factor1 = P1;
  fp.factor2 = P2;

  // tree factors glued along leaf edges must reproduce the glued tree's
  // polytope, block for block
  if (P1.tree && P2.tree && P1.tree->is_leaf_edge(fp.shared1) && P2.tree->is_leaf_edge(fp.shared2) &&
      fp.product.vertices.size() <= 100000) {
    auto gt = glue_trees(*P1.tree, fp.shared1, *P2.tree, fp.shared2);
    auto glued = tree_polytope(P1.group, gt.tree);
    if (glued.vertices.size() != fp.product.vertices.size())
      throw std::logic_error("fiber product: vertex count differs from the glued tree polytope");
    std::set<Coords> expected(glued.vertices.begin(), glued.vertices.end());
    for (const auto& v : fp.product.vertices) {
      Coords mapped(glued.ambient_dim(), 0);
      for (int j = 0; j < fp.m1; ++j) {
        int from = fp.product_block_of1(j);
        int to = gt.blocks_from1[j];
        for (int g = 0; g < s; ++g) mapped[to * s + g] = v[from * s + g];
      }
      for (int j = 0; j < fp.m2; ++j) {
        int from = fp.product_block_of2(j);
        int to = gt.blocks_from2[j];
        for (int g = 0; g < s; ++g) mapped[to * s + g] = v[from * s + g];
      }
      if (!expected.count(mapped))
        throw std::logic_error("fiber product: vertex missing from the glued tree polytope");
    }
    fp.checked_against_glued_tree = true;
  }
  return fp;
}

std::vector<Facet> fiber_facet_candidates(const FiberProduct& fp) {
  if (!fp.factor1.facets || !fp.factor2.facets)
    throw std::invalid_argument("fiber facets: both factors need verified facet lists");
  const int s = fp.product.block_size();
  std::vector<Facet> out;
  std::set<std::vector<int>> seen_touching;
  auto consider = [&](const Coords& functional, Int rhs) {
    auto check = verify_facet(fp.product, functional, rhs);
    if (!check.certified()) return;
    if (!seen_touching.insert(check.touching).second) return;  // same supporting hyperplane
    out.push_back(*check.facet);
  };
  for (const auto& f : *fp.factor1.facets) {
    Coords lifted(fp.product.ambient_dim(), 0);
    for (int j = 0; j < fp.m1; ++j) {
      int pb = fp.product_block_of1(j);
      for (int g = 0; g < s; ++g) lifted[pb * s + g] = f.functional[j * s + g];
    }
    consider(lifted, f.rhs);
  }
  for (const auto& f : *fp.factor2.facets) {
    Coords lifted(fp.product.ambient_dim(), 0);
    for (int j = 0; j < fp.m2; ++j) {
      int pb = fp.product_block_of2(j);
      for (int g = 0; g < s; ++g) lifted[pb * s + g] = f.functional[j * s + g];
    }
    consider(lifted, f.rhs);
  }
  return out;
}

FibGorReport verify_fibgor(const Polytope& P1, SimplexProjection pi1, const Polytope& P2,
                           SimplexProjection pi2, const KernelBounds& bounds,
                           Int normality_spot_k) {
  FibGorReport rep;
  rep.factor1 = gorenstein_index(P1);
  rep.factor2 = gorenstein_index(P2);

  if (!rep.factor1.gorenstein || !rep.factor2.gorenstein) {
    rep.hypothesis_failure = "a factor is not Gorenstein";
    return rep;
  }
  if (rep.factor1.index != rep.factor2.index) {
    std::ostringstream os;
    os << "factor indices differ: " << rep.factor1.index << " vs " << rep.factor2.index;
    rep.hypothesis_failure = os.str();
    return rep;
  }
  const Int k = rep.factor1.index;
  const int s = P1.block_size();
  const Coords& p1 = *rep.factor1.interior_point;
  const Coords& p2 = *rep.factor2.interior_point;
  Coords proj1(p1.begin() + pi1.block * s, p1.begin() + (pi1.block + 1) * s);
  Coords proj2(p2.begin() + pi2.block * s, p2.begin() + (pi2.block + 1) * s);
  if (proj1 != proj2) {
    rep.hypothesis_failure = "factor interior points project differently onto the simplex";
    return rep;
  }

  auto fp = fiber_product(P1, pi1, P2, pi2);
  if (!fp.onto1 || !fp.onto2) {
    rep.hypothesis_failure = "a projection does not cover the whole simplex";
    return rep;
  }
  rep.hypotheses_ok = true;

  auto lifted = fiber_facet_candidates(fp);
  try {
    auto brute = enumerate_facets(fp.product, bounds);
    if (!same_hyperplane_sets(fp.product, lifted, brute))
      throw std::logic_error("fiber facets: lifted list disagrees with brute-force enumeration");
    rep.facets_cross_checked = true;
  } catch (const std::invalid_argument&) {
    rep.cross_check_skipped = true;  // beyond enumeration bounds
  }
  fp.product.facets = lifted;
  fp.product.facet_provenance = rep.facets_cross_checked ? "lifted+cross-checked" : "lifted";

  rep.product = gorenstein_index(fp.product, 0, normality_spot_k);
  rep.index_matches = rep.product->gorenstein && rep.product->index == k;
  if (rep.product->interior_point) {
    rep.interior_projects =
        fp.phi1(*rep.product->interior_point) == p1 && fp.phi2(*rep.product->interior_point) == p2;
  }
  rep.fp = std::move(fp);
  return rep;
}

}  // namespace phylotope
