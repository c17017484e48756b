#include "phylotope/group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace phylotope {

GroupSpec::GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int f : factors_)
    if (f < 2) throw std::invalid_argument("group factor must be >= 2");
  long long ord = 1;
  for (int f : factors_) {
    ord *= f;
    if (ord > 4096) throw std::invalid_argument("group order above supported bound (4096)");
  }
  order_ = static_cast<int>(ord);

  neg_.resize(order_);
  add_.resize(static_cast<std::size_t>(order_) * order_);
  const int r = static_cast<int>(factors_.size());
  std::vector<int> ra(r), rb(r), rc(r);
  for (int a = 0; a < order_; ++a) {
    // decode a
    int t = a;
    for (int i = r - 1; i >= 0; --i) {
      ra[i] = t % factors_[i];
      t /= factors_[i];
    }
    for (int i = 0; i < r; ++i) rc[i] = (factors_[i] - ra[i]) % factors_[i];
    int n = 0;
    for (int i = 0; i < r; ++i) n = n * factors_[i] + rc[i];
    neg_[a] = n;
    for (int b = 0; b < order_; ++b) {
      t = b;
      for (int i = r - 1; i >= 0; --i) {
        rb[i] = t % factors_[i];
        t /= factors_[i];
      }
      int s = 0;
      for (int i = 0; i < r; ++i) s = s * factors_[i] + (ra[i] + rb[i]) % factors_[i];
      add_[static_cast<std::size_t>(a) * order_ + b] = s;
    }
  }
}

GroupSpec GroupSpec::parse(const std::string& name) {
  std::vector<int> factors;
  std::size_t i = 0;
  while (i < name.size()) {
    char c = name[i];
    if (c == 'x' || c == 'X') {
      ++i;
      continue;
    }
    if (c != 'Z' && c != 'z') throw std::invalid_argument("cannot parse group name: " + name);
    ++i;
    std::size_t j = i;
    while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
    if (j == i) throw std::invalid_argument("cannot parse group name: " + name);
    factors.push_back(std::stoi(name.substr(i, j - i)));
    i = j;
  }
  if (factors.empty()) throw std::invalid_argument("cannot parse group name: " + name);
  return GroupSpec(factors);
}

std::string GroupSpec::name() const {
  if (factors_.empty()) return "Z1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << "x";
    os << "Z" << factors_[i];
  }
  return os.str();
}

GroupElement GroupSpec::element(int index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("group element index out of range");
  GroupElement e;
  e.residues.resize(factors_.size());
  int t = index;
  for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
    e.residues[i] = t % factors_[i];
    t /= factors_[i];
  }
  return e;
}

int GroupSpec::index(const GroupElement& e) const {
  if (e.residues.size() != factors_.size())
    throw std::invalid_argument("group element has wrong number of residues for this group");
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int r = e.residues[i];
    if (r < 0 || r >= factors_[i]) throw std::invalid_argument("group element residue out of range");
    idx = idx * factors_[i] + r;
  }
  return idx;
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  out.reserve(spec.order());
  for (int i = 0; i < spec.order(); ++i) out.push_back(spec.element(i));
  return out;
}

GroupElement group_op(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  return spec.element(spec.add(spec.index(a), spec.index(b)));
}

GroupElement group_neg(const GroupSpec& spec, const GroupElement& a) {
  return spec.element(spec.neg(spec.index(a)));
}

GroupAutomorphism::GroupAutomorphism(const GroupSpec& spec, std::vector<int> images)
    : images_(std::move(images)) {
  const int n = spec.order();
  if (static_cast<int>(images_.size()) != n)
    throw std::invalid_argument("automorphism image table has wrong size");
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("automorphism images not a bijection");
    seen[v] = 1;
  }
  if (images_[0] != 0) throw std::invalid_argument("automorphism must fix the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images_[spec.add(a, b)] != spec.add(images_[a], images_[b]))
        throw std::invalid_argument("automorphism does not preserve addition");
}

GroupElement GroupAutomorphism::apply(const GroupSpec& spec, const GroupElement& e) const {
  return spec.element(images_[spec.index(e)]);
}

GroupAutomorphism GroupAutomorphism::inverse(const GroupSpec& spec) const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return GroupAutomorphism(spec, std::move(inv));
}

bool GroupAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<GroupAutomorphism> enumerate_automorphisms(const GroupSpec& spec, int max_order) {
  const int n = spec.order();
  if (n > max_order)
    throw std::invalid_argument("automorphism enumeration infeasible: group order " +
                                std::to_string(n) + " above bound " + std::to_string(max_order));
  const int r = static_cast<int>(spec.factors().size());

  // Generators e_i of the cyclic factors, as indices.
  std::vector<int> gens(r);
  for (int i = 0; i < r; ++i) {
    GroupElement g;
    g.residues.assign(r, 0);
    g.residues[i] = 1;
    gens[i] = spec.index(g);
  }
  // Residue decomposition of every element over the generators.
  std::vector<std::vector<int>> coords(n);
  for (int a = 0; a < n; ++a) coords[a] = spec.element(a).residues;

  std::vector<std::vector<int>> tables;
  std::vector<int> choice(r, 0);
  std::vector<int> image(n);
  std::vector<char> seen(n);
  // Every homomorphism is determined linearly by generator images; a choice is
  // valid when each image order divides its factor order and the induced map
  // is a bijection.
  auto scan = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      std::fill(image.begin(), image.end(), 0);
      for (int a = 0; a < n; ++a) {
        int v = 0;
        for (int i = 0; i < r; ++i)
          for (int c = 0; c < coords[a][i]; ++c) v = spec.add(v, choice[i]);
        image[a] = v;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (int v : image) {
        if (seen[v]) return;
        seen[v] = 1;
      }
      tables.push_back(image);
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      // order of cand must divide the factor order
      int acc = 0;
      for (int c = 0; c < spec.factors()[pos]; ++c) acc = spec.add(acc, cand);
      if (acc != 0) continue;
      choice[pos] = cand;
      self(self, pos + 1);
    }
  };
  if (n == 1) {
    tables.push_back({0});
  } else {
    scan(scan, 0);
  }

  std::sort(tables.begin(), tables.end());
  std::vector<GroupAutomorphism> out;
  out.reserve(tables.size());
  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i) ident[i] = i;
  out.emplace_back(spec, ident);
  for (auto& t : tables)
    if (t != ident) out.emplace_back(spec, std::move(t));
  return out;
}

}  // namespace phylotope
