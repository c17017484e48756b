#include "phylotope/gorenstein.hpp"

#include <sstream>
#include <stdexcept>

namespace phylotope {

KimuraFacetSystem kimura_facets(int m, Int k) {
  if (m < 3) throw std::invalid_argument("Kimura facet list needs m >= 3");
  if (k < 1) throw std::invalid_argument("facet list: k must be >= 1");
  GroupSpec group({2, 2});
  auto P = claw_polytope(group, m);  // lattice for the normalizers

  KimuraFacetSystem sys;
  sys.m = m;
  sys.k = k;
  for (int j = 0; j < m; ++j)
    for (int g = 0; g < 4; ++g) {
      Facet f;
      f.functional.assign(4 * m, 0);
      f.functional[P.coord(j, g)] = 1;
      f.rhs = 0;
      f.normalizer = functional_lattice_gcd(f.functional, P.lattice);
      sys.facets.push_back(std::move(f));
    }
  // odd block subsets, then each pairing of 0 with a nonzero element
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) % 2 == 0) continue;
    for (int p = 1; p <= 3; ++p) {
      int q = p == 1 ? 2 : 1;
      int r = p == 3 ? 2 : 3;
      Facet f;
      f.functional.assign(4 * m, 0);
      for (int j = 0; j < m; ++j) {
        if (mask & (1u << j)) {
          f.functional[P.coord(j, 0)] = 1;
          f.functional[P.coord(j, p)] = 1;
        } else {
          f.functional[P.coord(j, q)] = 1;
          f.functional[P.coord(j, r)] = 1;
        }
      }
      f.rhs = k;
      f.normalizer = functional_lattice_gcd(f.functional, P.lattice);
      sys.facets.push_back(std::move(f));
    }
  }
  for (int j = 0; j < m; ++j) {
    BlockEquality eq;
    eq.functional.assign(4 * m, 0);
    for (int g = 0; g < 4; ++g) eq.functional[P.coord(j, g)] = 1;
    eq.value = k;
    sys.equalities.push_back(std::move(eq));
  }
  return sys;
}

void attach_kimura_facets(Polytope& P) {
  if (P.group.factors() != std::vector<int>{2, 2})
    throw std::invalid_argument("Kimura facet list: polytope group must be Z2xZ2");
  if (!P.is_claw()) throw std::invalid_argument("Kimura facet list: polytope must be a claw");
  auto sys = kimura_facets(P.blocks, 1);
  std::vector<Facet> certified;
  certified.reserve(sys.facets.size());
  for (const auto& f : sys.facets) {
    auto check = verify_facet(P, f.functional, f.rhs);
    if (!check.certified())
      throw std::logic_error("closed-form Kimura facet failed verification: " + check.detail);
    if (check.facet->normalizer != f.normalizer)
      throw std::logic_error("closed-form Kimura facet normalizer mismatch");
    certified.push_back(*check.facet);
  }
  P.facets = std::move(certified);
  P.facet_provenance = "closed-form";
}

GorensteinReport gorenstein_index(const Polytope& P, Int k_max, Int normality_spot_k) {
  if (!P.facets) throw std::invalid_argument("gorenstein_index: verified facet list required");
  const int dim = P.lattice.rank();
  if (k_max <= 0) k_max = dim + 1;

  GorensteinReport rep;
  {
    std::ostringstream os;
    os << P.group.name() << " on " << P.blocks << " blocks";
    rep.polytope_name = os.str();
  }
  for (Int k = 1; k <= k_max; ++k) {
    auto interior = dilation_points(P, k, true);
    if (interior.empty()) continue;
    rep.minimal_k = k;
    rep.interior_count = interior.size();
    if (interior.size() > 1) {
      rep.gorenstein = false;
      std::ostringstream os;
      os << interior.size() << " interior lattice points at the minimal dilation " << k;
      rep.reason = os.str();
    } else {
      rep.interior_point = interior[0];
      rep.gorenstein = true;
      for (const auto& f : *P.facets) {
        Int d = lattice_distance(P, interior[0], dilate_facet(f, k));
        rep.distances.push_back(d);
        if (d != 1) rep.gorenstein = false;
      }
      if (rep.gorenstein) {
        rep.index = k;
      } else {
        std::ostringstream os;
        os << "interior point at lattice distance != 1 from a facet at dilation " << k;
        rep.reason = os.str();
      }
    }
    break;
  }
  if (rep.minimal_k == 0)
    throw std::runtime_error("gorenstein_index: no interior lattice point up to k_max = " +
                             std::to_string(k_max) + ", inconclusive");

  if (normality_spot_k > 0) {
    Int depth = std::min(normality_spot_k, rep.minimal_k);
    auto normality = check_normality(P, depth);
    rep.normality_checked_k = depth;
    rep.normality_ok = normality.normal_up_to_kmax;
    rep.normality_at_decisive = rep.normality_ok && depth >= rep.minimal_k;
  }
  return rep;
}

}  // namespace phylotope
