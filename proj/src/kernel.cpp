#include "phylotope/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "phylotope/parallel.hpp"

namespace phylotope {

FacetCheck verify_facet_points(const std::vector<Coords>& points, const LatticeData& lattice,
                               const Coords& functional, Int rhs) {
  if (points.empty()) throw std::invalid_argument("verify_facet: empty point set");
  if (functional.size() != points[0].size())
    throw std::invalid_argument("verify_facet: functional dimension mismatch");
  FacetCheck out;
  std::vector<int> touching;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Int v = dot(functional, points[i]);
    if (v < rhs) {
      out.status = FacetCheck::Status::Violated;
      std::ostringstream os;
      os << "vertex " << i << " evaluates to " << v << " < " << rhs;
      out.detail = os.str();
      return out;
    }
    if (v == rhs) touching.push_back(static_cast<int>(i));
  }
  if (touching.empty()) {
    out.status = FacetCheck::Status::NotSupporting;
    out.detail = "valid inequality but no vertex attains equality";
    return out;
  }
  std::vector<Coords> pts;
  pts.reserve(touching.size());
  for (int i : touching) pts.push_back(points[i]);
  const int dim = lattice.rank();  // affine dimension of the hull
  const int tdim = affine_dim(pts);
  out.touching = std::move(touching);
  out.touching_dim = tdim;
  if (tdim == dim) {
    out.status = FacetCheck::Status::WholePolytope;
    out.detail = "equality spans the whole affine hull";
    return out;
  }
  if (tdim < dim - 1) {
    out.status = FacetCheck::Status::FaceTooSmall;
    std::ostringstream os;
    os << "touching set has affine dimension " << tdim << ", needed " << dim - 1;
    out.detail = os.str();
    return out;
  }
  Facet f;
  f.functional = functional;
  f.rhs = rhs;
  Int content = vector_content(f.functional);
  if (content > 1) {
    if (rhs % content != 0) {
      // cannot happen for a supporting hyperplane through lattice points
      throw std::logic_error("verify_facet: non-primitive functional with incompatible rhs");
    }
    for (auto& c : f.functional) c /= content;
    f.rhs /= content;
  }
  f.normalizer = functional_lattice_gcd(f.functional, lattice);
  if (f.normalizer == 0) f.normalizer = 1;  // functional constant on the lattice
  out.status = FacetCheck::Status::Certified;
  out.facet = std::move(f);
  return out;
}

FacetCheck verify_facet(const Polytope& P, const Coords& functional, Int rhs) {
  return verify_facet_points(P.vertices, P.lattice, functional, rhs);
}

Facet dilate_facet(const Facet& f, Int k) {
  Facet d = f;
  d.rhs = checked_mul(k, f.rhs);
  return d;
}

Int lattice_distance(const Polytope& P, const LatticePoint& x, const Facet& facet) {
  P.degree(x);  // well-formedness: equal non-negative block sums
  if (!lattice_membership(P, x)) throw std::invalid_argument("lattice_distance: point not in the lattice");
  // the facet is stated for the dilation containing x (scale with dilate_facet)
  Int slack = checked_sub(facet.eval(x), facet.rhs);
  if (slack < 0) throw std::invalid_argument("lattice_distance: point violates the facet");
  if (facet.normalizer <= 0 || slack % facet.normalizer != 0)
    throw std::logic_error("lattice_distance: slack not divisible by the normalizer");
  return slack / facet.normalizer;
}

namespace {

// Compositions of k into `parts` non-negative summands, lexicographic.
std::vector<Coords> compositions(Int k, int parts) {
  std::vector<Coords> out;
  Coords c(parts, 0);
  auto rec = [&](auto&& self, int i, Int left) -> void {
    if (i == parts - 1) {
      c[i] = left;
      out.push_back(c);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      c[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (parts == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, k);
  return out;
}

}  // namespace

std::vector<LatticePoint> dilation_points(const Polytope& P, Int k, bool strict) {
  if (!P.facets)
    throw std::invalid_argument("dilation_points: facet data missing (enumerate or attach first)");
  if (k < 1) throw std::invalid_argument("dilation_points: k must be >= 1");
  const auto& facets = *P.facets;
  const int s = P.block_size();
  const int m = P.blocks;
  const std::size_t nf = facets.size();

  auto comps = compositions(k, s);
  // Per facet: bound of the inequality at level k, per-block contribution of
  // every composition, and suffix maxima for pruning.
  std::vector<Int> bound(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    bound[f] = checked_mul(k, facets[f].rhs);
    if (strict) bound[f] = checked_add(bound[f], 1);
  }
  // contrib[f][j][c] = facet f, block j, composition c
  std::vector<std::vector<std::vector<Int>>> contrib(nf);
  std::vector<std::vector<Int>> suffix_max(nf, std::vector<Int>(m + 1, 0));
  for (std::size_t f = 0; f < nf; ++f) {
    contrib[f].assign(m, std::vector<Int>(comps.size(), 0));
    for (int j = 0; j < m; ++j) {
      Int mx = 0;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        Int v = 0;
        for (int g = 0; g < s; ++g)
          v = checked_add(v, checked_mul(facets[f].functional[P.coord(j, g)], comps[c][g]));
        contrib[f][j][c] = v;
        if (c == 0 || v > mx) mx = v;
      }
      suffix_max[f][j] = mx;
    }
    for (int j = m - 1; j >= 0; --j) suffix_max[f][j] = checked_add(suffix_max[f][j], suffix_max[f][j + 1]);
  }

  const bool claw = P.is_claw();
  auto enumerate_from = [&](std::size_t first_comp) {
    std::vector<LatticePoint> found;
    std::vector<Int> partial(nf, 0);
    LatticePoint x(P.ambient_dim(), 0);
    auto rec = [&](auto&& self, int j) -> void {
      if (j == m) {
        if (claw ? lattice_membership(P, x) : P.lattice.contains(x, k)) found.push_back(x);
        return;
      }
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if (j == 0 && c != first_comp) continue;
        bool ok = true;
        for (std::size_t f = 0; f < nf; ++f) {
          Int p = checked_add(partial[f], contrib[f][j][c]);
          if (checked_add(p, suffix_max[f][j + 1]) < bound[f]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        for (std::size_t f = 0; f < nf; ++f) partial[f] = checked_add(partial[f], contrib[f][j][c]);
        for (int g = 0; g < s; ++g) x[P.coord(j, g)] = comps[c][g];
        self(self, j + 1);
        for (std::size_t f = 0; f < nf; ++f) partial[f] -= contrib[f][j][c];
      }
      for (int g = 0; g < s; ++g) x[P.coord(j, g)] = 0;
    };
    rec(rec, 0);
    return found;
  };

  std::vector<std::vector<LatticePoint>> per_first(comps.size());
  parallel_for(comps.size(), [&](std::size_t c) { per_first[c] = enumerate_from(c); });
  std::vector<LatticePoint> out;
  for (auto& chunk : per_first)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  return out;  // lexicographic by construction
}

std::vector<AdjacencyCertificate> adjacent_vertices(const Polytope& P, const LatticePoint& v,
                                                    const KernelBounds& bounds) {
  int vi = P.vertex_index(v);
  if (vi < 0) throw std::invalid_argument("adjacent_vertices: not a vertex of the polytope");
  std::vector<Facet> facets;
  if (P.facets) {
    facets = *P.facets;
  } else {
    facets = enumerate_facets(P, bounds);
  }
  const std::size_t n = P.vertices.size();
  std::vector<std::vector<char>> on_facet(facets.size(), std::vector<char>(n, 0));
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t i = 0; i < n; ++i)
      on_facet[f][i] = facets[f].eval(P.vertices[i]) == facets[f].rhs;

  std::vector<AdjacencyCertificate> out;
  for (std::size_t w = 0; w < n; ++w) {
    if (static_cast<int>(w) == vi) continue;
    // facets through both v and w
    std::vector<std::size_t> common;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (on_facet[f][vi] && on_facet[f][w]) common.push_back(f);
    // the smallest face containing v and w is the set of vertices on all of them
    bool edge = true;
    if (common.empty()) {
      edge = n == 2;
    } else {
      for (std::size_t i = 0; i < n && edge; ++i) {
        if (i == static_cast<std::size_t>(vi) || i == w) continue;
        bool on_all = true;
        for (std::size_t f : common)
          if (!on_facet[f][i]) {
            on_all = false;
            break;
          }
        if (on_all) edge = false;
      }
    }
    if (!edge) continue;
    AdjacencyCertificate cert;
    cert.neighbor = P.vertices[w];
    cert.functional.assign(P.ambient_dim(), 0);
    Int rhs_sum = 0;
    for (std::size_t f : common) {
      cert.functional = cert.functional + facets[f].functional;
      rhs_sum = checked_add(rhs_sum, facets[f].rhs);
    }
    cert.value = rhs_sum;
    // the summed functional is minimized exactly on {v, w}; check it
    for (std::size_t i = 0; i < n; ++i) {
      Int val = dot(cert.functional, P.vertices[i]);
      bool should_touch = i == static_cast<std::size_t>(vi) || i == w;
      if (should_touch ? val != cert.value : val <= cert.value)
        throw std::logic_error("adjacent_vertices: certificate functional failed validation");
    }
    out.push_back(std::move(cert));
  }
  return out;
}

bool same_hyperplane_sets(const Polytope& P, const std::vector<Facet>& a,
                          const std::vector<Facet>& b) {
  auto touch_sets = [&](const std::vector<Facet>& fs) {
    std::set<std::vector<int>> sets;
    for (const auto& f : fs) {
      std::vector<int> t;
      for (std::size_t i = 0; i < P.vertices.size(); ++i)
        if (f.eval(P.vertices[i]) == f.rhs) t.push_back(static_cast<int>(i));
      sets.insert(std::move(t));
    }
    return sets;
  };
  return touch_sets(a) == touch_sets(b);
}

}  // namespace phylotope
