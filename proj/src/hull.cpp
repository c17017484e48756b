#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "phylotope/kernel.hpp"

// Facet enumeration by the double description method, run on the polar side:
// the facets of conv(V) are the extreme rays of the cone
//   { y : <(v,1), y> >= 0 for every vertex v },
// after the lineality space (the affine-hull equations) is quotiented away by
// rewriting everything in a lattice basis of the homogenized vertex span.

namespace phylotope {

namespace {

struct Bitset {
  std::vector<std::uint64_t> words;
  explicit Bitset(std::size_t n = 0) : words((n + 63) / 64, 0) {}
  void set(std::size_t i) { words[i / 64] |= std::uint64_t(1) << (i % 64); }
  bool test(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }
  static Bitset intersect(const Bitset& a, const Bitset& b) {
    Bitset r;
    r.words.resize(a.words.size());
    for (std::size_t i = 0; i < a.words.size(); ++i) r.words[i] = a.words[i] & b.words[i];
    return r;
  }
  bool subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i] & ~other.words[i]) return false;
    return true;
  }
};

struct Ray {
  Coords z;
  Bitset tight;
};

// Integer coordinates of x over an HNF basis; nullopt when x is outside the
// integer row span.
std::optional<Coords> integer_coordinates(const std::vector<Coords>& basis, const Coords& x) {
  Coords r = x;
  Coords coeffs(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t p = 0;
    while (p < basis[i].size() && basis[i][p] == 0) ++p;
    Int v = r[p];
    Int piv = basis[i][p];
    if (v % piv != 0) return std::nullopt;
    Int q = v / piv;
    coeffs[i] = q;
    for (std::size_t c = 0; c < r.size(); ++c) r[c] = checked_sub(r[c], checked_mul(q, basis[i][c]));
  }
  for (Int v : r)
    if (v != 0) return std::nullopt;
  return coeffs;
}

// Gaussian elimination over rationals; A must be square and invertible.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("solve_square: singular matrix");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col].is_zero()) continue;
      Rational factor = A[r][col] / A[col][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] = A[r][c] - factor * A[col][c];
      b[r] = b[r] - factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

// Extreme rays of the pointed cone { z : constraints * z >= 0 }.
std::vector<Coords> extreme_rays(const std::vector<Coords>& constraints, std::size_t dim) {
  const std::size_t n = constraints.size();

  // seed with `dim` independent constraints forming a simplicial cone
  std::vector<std::size_t> seed;
  {
    std::vector<std::vector<Rational>> echelon;
    for (std::size_t i = 0; i < n && seed.size() < dim; ++i) {
      std::vector<Rational> row(constraints[i].begin(), constraints[i].end());
      for (const auto& e : echelon) {
        std::size_t p = 0;
        while (p < dim && e[p].is_zero()) ++p;
        if (p < dim && !row[p].is_zero()) {
          Rational factor = row[p] / e[p];
          for (std::size_t c = p; c < dim; ++c) row[c] = row[c] - factor * e[c];
        }
      }
      if (std::any_of(row.begin(), row.end(), [](const Rational& r) { return !r.is_zero(); })) {
        echelon.push_back(std::move(row));
        seed.push_back(i);
      }
    }
    if (seed.size() != dim) throw std::logic_error("extreme_rays: constraint matrix not full rank");
  }

  std::vector<char> processed(n, 0);
  std::vector<Ray> rays;
  {
    std::vector<std::vector<Rational>> M(dim, std::vector<Rational>(dim));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) M[i][j] = Rational(constraints[seed[i]][j]);
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<Rational> e(dim);
      e[j] = Rational(1);
      auto y = solve_square(M, e);
      Ray r;
      r.z = primitive_integer(y);
      r.tight = Bitset(n);
      rays.push_back(std::move(r));
    }
    for (std::size_t i : seed) processed[i] = 1;
    for (auto& r : rays)
      for (std::size_t i = 0; i < n; ++i)
        if (processed[i] && dot(constraints[i], r.z) == 0) r.tight.set(i);
  }

  for (std::size_t t = 0; t < n; ++t) {
    if (processed[t]) continue;
    const Coords& a = constraints[t];
    std::vector<Int> slack(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      slack[i] = dot(a, rays[i].z);
      if (slack[i] < 0) any_neg = true;
    }
    processed[t] = 1;
    if (!any_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (slack[i] == 0) rays[i].tight.set(t);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (slack[i] > 0) next.push_back(rays[i]);
      if (slack[i] == 0) {
        next.push_back(rays[i]);
        next.back().tight.set(t);
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (slack[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (slack[q] >= 0) continue;
        // adjacency: no third ray is tight on everything p and q share
        Bitset common = Bitset::intersect(rays[p].tight, rays[q].tight);
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Coords z(rays[p].z.size());
        for (std::size_t c = 0; c < z.size(); ++c)
          z[c] = checked_sub(checked_mul(slack[p], rays[q].z[c]), checked_mul(slack[q], rays[p].z[c]));
        make_primitive(z);
        Ray nr;
        nr.z = std::move(z);
        nr.tight = Bitset(n);
        for (std::size_t i = 0; i < n; ++i)
          if (processed[i] && dot(constraints[i], nr.z) == 0) nr.tight.set(i);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  std::vector<Coords> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.z));
  return out;
}

}  // namespace

std::vector<Facet> enumerate_facets_points(const std::vector<Coords>& points,
                                           const LatticeData& lattice, const KernelBounds& bounds) {
  const int n = static_cast<int>(points.size());
  const int dim = lattice.rank();
  if (n > bounds.max_vertices || dim > bounds.max_dim)
    throw std::invalid_argument("enumerate_facets: infeasible enumeration (" + std::to_string(n) +
                                " vertices, dimension " + std::to_string(dim) + " vs bounds " +
                                std::to_string(bounds.max_vertices) + "/" +
                                std::to_string(bounds.max_dim) + ")");
  if (dim == 0) return {};

  const int d = static_cast<int>(points[0].size());
  std::vector<Coords> homog;
  homog.reserve(n);
  for (const auto& v : points) {
    Coords r = v;
    r.push_back(1);
    homog.push_back(std::move(r));
  }
  auto W = hnf(homog);
  const std::size_t rho = W.size();

  std::vector<Coords> lambda;
  lambda.reserve(n);
  for (const auto& r : homog) {
    auto coords = integer_coordinates(W, r);
    if (!coords) throw std::logic_error("enumerate_facets: vertex escaped its own lattice span");
    lambda.push_back(std::move(*coords));
  }

  auto rays = extreme_rays(lambda, rho);

  // Pull each ray z back to an ambient functional: solve W^T-restricted system
  // M y_piv = z where M[i][j] = W[i][pivot_j] is upper triangular.
  std::vector<int> pivots(rho);
  for (std::size_t i = 0; i < rho; ++i) {
    int p = 0;
    while (W[i][p] == 0) ++p;
    pivots[i] = p;
  }
  std::vector<Facet> out;
  for (const auto& z : rays) {
    std::vector<Rational> ypiv(rho);
    for (int i = static_cast<int>(rho) - 1; i >= 0; --i) {
      Rational acc(z[i]);
      for (std::size_t j = i + 1; j < rho; ++j)
        acc = acc - Rational(W[i][pivots[j]]) * ypiv[j];
      ypiv[i] = acc / Rational(W[i][pivots[i]]);
    }
    std::vector<Rational> y(d + 1, Rational(0));
    for (std::size_t i = 0; i < rho; ++i) y[pivots[i]] = ypiv[i];
    Coords yi = primitive_integer(y);
    Coords functional(yi.begin(), yi.begin() + d);
    Int rhs = -yi[d];
    auto check = verify_facet_points(points, lattice, functional, rhs);
    if (!check.certified())
      throw std::logic_error("enumerate_facets: double description produced a non-facet: " +
                             check.detail);
    out.push_back(std::move(*check.facet));
  }
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
    if (a.functional != b.functional) return a.functional < b.functional;
    return a.rhs < b.rhs;
  });
  return out;
}

std::vector<Facet> enumerate_facets(const Polytope& P, const KernelBounds& bounds) {
  return enumerate_facets_points(P.vertices, P.lattice, bounds);
}

}  // namespace phylotope
