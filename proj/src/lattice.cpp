#include "phylotope/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace phylotope {

namespace {

void row_sub_mul(Coords& target, const Coords& src, Int q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < target.size(); ++c)
    target[c] = checked_sub(target[c], checked_mul(q, src[c]));
}

}  // namespace

std::vector<Coords> hnf(std::vector<Coords> rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const Coords& r) {
                              return std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; });
                            }),
             rows.end());
  if (rows.empty()) return rows;
  const std::size_t width = rows[0].size();
  for (auto& r : rows)
    if (r.size() != width) throw std::invalid_argument("hnf: rows of unequal length");

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
    // Euclidean elimination in this column among rows >= pivot_row.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() ||
            std::abs(rows[i][col]) < std::abs(rows[best][col]))
          best = i;
      }
      if (best == rows.size()) break;  // column is zero below
      std::swap(rows[pivot_row], rows[best]);
      bool reduced_all = true;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[pivot_row][col];
        row_sub_mul(rows[i], rows[pivot_row], q);
        if (rows[i][col] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0)
      for (auto& x : rows[pivot_row]) x = checked_neg(x);
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int v = rows[i][col];
      Int p = rows[pivot_row][col];
      Int q = v / p;
      if (v % p < 0) q -= 1;  // floor division
      row_sub_mul(rows[i], rows[pivot_row], q);
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

int linear_rank(const std::vector<Coords>& rows) { return static_cast<int>(hnf(rows).size()); }

int affine_dim(const std::vector<Coords>& points) {
  if (points.empty()) throw std::invalid_argument("affine_dim: empty point set");
  std::vector<Coords> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return linear_rank(diffs);
}

static std::vector<int> pivot_columns(const std::vector<Coords>& basis) {
  std::vector<int> pivots;
  pivots.reserve(basis.size());
  for (const auto& row : basis) {
    int p = -1;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) {
        p = static_cast<int>(c);
        break;
      }
    pivots.push_back(p);
  }
  return pivots;
}

std::optional<Coords> LatticeData::solve_difference(const Coords& x) const {
  if (x.size() != anchor.size()) throw std::invalid_argument("lattice solve: dimension mismatch");
  Coords r = x;
  Coords coeffs(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Int v = r[pivots[i]];
    Int p = basis[i][pivots[i]];
    if (v % p != 0) return std::nullopt;
    Int q = v / p;
    coeffs[i] = q;
    row_sub_mul(r, basis[i], q);
  }
  for (Int v : r)
    if (v != 0) return std::nullopt;
  return coeffs;
}

bool LatticeData::contains_difference(const Coords& x) const {
  return solve_difference(x).has_value();
}

bool LatticeData::contains(const Coords& x, Int degree) const {
  Coords shifted(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    shifted[i] = checked_sub(x[i], checked_mul(degree, anchor[i]));
  return contains_difference(shifted);
}

LatticeData lattice_from_points(const std::vector<Coords>& points) {
  if (points.empty()) throw std::invalid_argument("lattice_from_points: empty point set");
  LatticeData lat;
  lat.anchor = *std::min_element(points.begin(), points.end());
  std::vector<Coords> diffs;
  diffs.reserve(points.size());
  for (const auto& p : points)
    if (p != lat.anchor) diffs.push_back(p - lat.anchor);
  lat.basis = hnf(std::move(diffs));
  lat.pivots = pivot_columns(lat.basis);
  return lat;
}

Int functional_lattice_gcd(const Coords& f, const LatticeData& lattice) {
  Int g = 0;
  for (const auto& row : lattice.basis) {
    g = gcd_nonneg(g, dot(f, row));
    if (g == 1) break;
  }
  return g;
}

}  // namespace phylotope
