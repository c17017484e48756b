#include <doctest.h>

#include <algorithm>
#include <random>

#include "phylotope/lattice.hpp"
#include "phylotope/polytope.hpp"

using namespace phylotope;

namespace {

// Rank oracle: plain fraction-free elimination over long double rationals is
// not exact, so use a small exact rational elimination independent of hnf.
int rank_oracle(std::vector<Coords> rows) {
  struct Q {
    long long n, d;
  };
  auto norm = [](Q q) {
    if (q.d < 0) {
      q.n = -q.n;
      q.d = -q.d;
    }
    long long g = std::gcd(std::abs(q.n), q.d);
    if (g > 1) {
      q.n /= g;
      q.d /= g;
    }
    return q;
  };
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<std::vector<Q>> M;
  for (auto& r : rows) {
    std::vector<Q> row;
    for (Int v : r) row.push_back({v, 1});
    M.push_back(row);
  }
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(M.size()); ++c) {
    std::size_t piv = rank;
    while (piv < M.size() && M[piv][c].n == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[rank], M[piv]);
    for (std::size_t r = rank + 1; r < M.size(); ++r) {
      if (M[r][c].n == 0) continue;
      Q f = norm({M[r][c].n * M[rank][c].d, M[r][c].d * M[rank][c].n});
      for (std::size_t cc = c; cc < cols; ++cc) {
        Q t = norm({f.n * M[rank][cc].n, f.d * M[rank][cc].d});
        M[r][cc] = norm({M[r][cc].n * t.d - t.n * M[r][cc].d, M[r][cc].d * t.d});
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("hnf canonical form of a small lattice") {
  std::vector<Coords> in{{2, 0}, {0, 2}, {1, 1}};
  auto basis = hnf(in);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == Coords{1, 1});
  CHECK(basis[1] == Coords{0, 2});

  SUBCASE("identical for any input order") {
    std::sort(in.begin(), in.end());
    do {
      CHECK(hnf(in) == basis);
    } while (std::next_permutation(in.begin(), in.end()));
  }
  SUBCASE("idempotent") { CHECK(hnf(basis) == basis); }
}

TEST_CASE("hnf of unit vectors") {
  std::vector<Coords> in{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  auto basis = hnf(in);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == Coords{1, 0, 0});
  CHECK(basis[1] == Coords{0, 1, 0});
  CHECK(basis[2] == Coords{0, 0, 1});
}

TEST_CASE("lattice membership against the basis") {
  auto P = claw_polytope(GroupSpec({2}), 3);
  const auto& lat = P.lattice;
  CHECK(lat.rank() == 3);
  for (const auto& v : P.vertices) {
    CHECK(lat.contains(v, 1));
    for (const auto& w : P.vertices) {
      CHECK(lat.contains_difference(v - w));
      CHECK(lat.contains(v + w, 2));
    }
  }
  Coords not_in(6, 0);
  not_in[0] = 1;  // unequal block sums
  CHECK_FALSE(lat.contains(not_in, 1));
}

TEST_CASE("affine dimension") {
  CHECK(affine_dim({{5, 7, 1}}) == 0);

  auto p2 = claw_polytope(GroupSpec({2}), 3);
  CHECK(affine_dim(p2.vertices) == 3);
  CHECK(rank_oracle([&] {
          std::vector<Coords> diffs;
          for (std::size_t i = 1; i < p2.vertices.size(); ++i)
            diffs.push_back(p2.vertices[i] - p2.vertices[0]);
          return diffs;
        }()) == 3);

  auto p3 = claw_polytope(GroupSpec({3}), 3);
  CHECK(affine_dim(p3.vertices) == 6);
  CHECK(rank_oracle([&] {
          std::vector<Coords> diffs;
          for (std::size_t i = 1; i < p3.vertices.size(); ++i)
            diffs.push_back(p3.vertices[i] - p3.vertices[0]);
          return diffs;
        }()) == 6);
}

TEST_CASE("hnf rank agrees with the rational elimination oracle on random matrices") {
  std::mt19937_64 rng(20240001);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Coords> rows(3 + trial % 4, Coords(5));
    for (auto& r : rows)
      for (auto& x : r) x = static_cast<Int>(rng() % 7) - 3;
    CHECK(linear_rank(rows) == rank_oracle(rows));
  }
}

TEST_CASE("hnf canonicity and span stability on random matrices") {
  std::mt19937_64 rng(20240005);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Coords> rows(4, Coords(4));
    for (auto& r : rows)
      for (auto& x : r) x = static_cast<Int>(rng() % 9) - 4;
    auto basis = hnf(rows);
    CHECK(hnf(basis) == basis);  // idempotent
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(hnf(rows) == basis);  // order independent
    // every input row solves over the basis
    LatticeData lat;
    lat.basis = basis;
    lat.anchor = Coords(4, 0);
    lat.pivots.clear();
    for (const auto& row : basis) {
      int p = 0;
      while (row[p] == 0) ++p;
      lat.pivots.push_back(p);
    }
    for (const auto& r : rows) CHECK(lat.contains_difference(r));
  }
}

TEST_CASE("span re-acceptance for claw vertex differences") {
  auto P = claw_polytope(GroupSpec({2}), 3);
  std::vector<Coords> diffs;
  for (std::size_t i = 1; i < P.vertices.size(); ++i) diffs.push_back(P.vertices[i] - P.vertices[0]);
  auto basis = hnf(diffs);
  CHECK(basis.size() == 3);
  LatticeData lat = P.lattice;
  for (const auto& dvec : diffs) CHECK(lat.contains_difference(dvec));
}
