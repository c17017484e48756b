#pragma once

#include <string>
#include <vector>

#include "phylotope/checked.hpp"

namespace phylotope {

// Element of a finite abelian group in product form, one residue per cyclic
// factor. An empty residue vector is the unique element of the trivial group.
struct GroupElement {
  std::vector<int> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// A finite abelian group presented as Z_{n1} x ... x Z_{nr}. Products with the
// same underlying abstract group but different factor lists (Z6 vs Z2xZ3) are
// distinct specs on purpose; nothing here normalizes presentations.
//
// Elements are addressed either structurally (GroupElement) or by their index
// in enumeration order, which is lexicographic on residues with the identity
// first. The index form drives the hot loops.
class GroupSpec {
public:
  GroupSpec() : GroupSpec(std::vector<int>{}) {}  // trivial group
  explicit GroupSpec(std::vector<int> factors);

  // Parses names like "Z6", "Z2xZ2", "z2XZ4".
  static GroupSpec parse(const std::string& name);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  std::string name() const;

  // index <-> element
  GroupElement element(int index) const;
  int index(const GroupElement& e) const;

  int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * order_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors_ == b.factors_; }

private:
  std::vector<int> factors_;
  int order_ = 1;
  std::vector<int> add_;  // order x order, row-major
  std::vector<int> neg_;
};

// Identity-first enumeration of all group elements.
std::vector<GroupElement> enumerate_elements(const GroupSpec& spec);

GroupElement group_op(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement group_neg(const GroupSpec& spec, const GroupElement& a);

// Automorphism as a full permutation of element indices. Construction checks
// bijectivity, that the identity is fixed and that addition is preserved over
// all pairs.
class GroupAutomorphism {
public:
  GroupAutomorphism(const GroupSpec& spec, std::vector<int> images);

  int apply(int index) const { return images_[index]; }
  GroupElement apply(const GroupSpec& spec, const GroupElement& e) const;
  const std::vector<int>& images() const { return images_; }
  GroupAutomorphism inverse(const GroupSpec& spec) const;
  bool is_identity() const;

  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;

private:
  std::vector<int> images_;
};

// The full automorphism group, identity first, then sorted by image table.
// Brute force over generator images; refuses groups larger than max_order.
std::vector<GroupAutomorphism> enumerate_automorphisms(const GroupSpec& spec, int max_order = 16);

}  // namespace phylotope
