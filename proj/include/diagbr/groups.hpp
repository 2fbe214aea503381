#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "diagbr/fin_ab_group.hpp"

namespace diagbr {

inline constexpr std::size_t kDefaultOrderBound = 20000;

using Perm = std::vector<std::uint16_t>;

// Permutation group on {0..degree-1}, fully enumerated. Element 0 is the
// identity; elements are numbered in breadth-first order from the given
// generators. Composition is (a*b)(i) = a(b(i)).
class FiniteGroup {
 public:
  static FiniteGroup from_permutations(std::size_t degree, const std::vector<Perm>& generators,
                                       std::size_t order_bound = kDefaultOrderBound,
                                       std::string name = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return 0; }

  std::size_t num_generators() const noexcept { return generators_.size(); }
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  std::size_t generator(std::size_t k) const { return generators_.at(k); }

  std::span<const std::uint16_t> perm(std::size_t g) const {
    return {elements_.data() + g * degree_, degree_};
  }
  std::size_t apply(std::size_t g, std::size_t point) const { return elements_[g * degree_ + point]; }

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  // g * generator(k), tabulated.
  std::size_t right_gen(std::size_t g, std::size_t k) const {
    return right_gen_[g * generators_.size() + k];
  }
  std::size_t element_order(std::size_t g) const;

  // Index of a permutation, or order() when absent.
  std::size_t find(std::span<const std::uint16_t> p) const;
  bool is_transitive() const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::u16string& s) const noexcept {
      return std::hash<std::u16string>{}(s);
    }
  };

  std::string name_;
  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<std::uint16_t> elements_;
  std::vector<std::size_t> generators_;
  std::vector<std::uint32_t> right_gen_;
  std::vector<std::uint32_t> inverse_;
  std::unordered_map<std::u16string, std::uint32_t, KeyHash> index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Subgroup given by its sorted member list.
struct SubgroupDatum {
  std::vector<std::size_t> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(std::size_t g) const;
};

SubgroupDatum generate_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& gens);
SubgroupDatum whole_group(const FiniteGroup& g);
SubgroupDatum trivial_subgroup();
SubgroupDatum point_stabilizer(const FiniteGroup& g, std::size_t point);
SubgroupDatum normal_closure(const FiniteGroup& g, const std::vector<std::size_t>& gens);
bool is_normal(const FiniteGroup& g, const SubgroupDatum& s);
// Few elements that generate s.
std::vector<std::size_t> small_generating_set(const FiniteGroup& g, const SubgroupDatum& s);

// G / [G,G]N for normal N, with the projection of every element.
struct AbQuotient {
  FinAbGroup group;
  std::vector<long> moduli;                 // invariant factors of group
  std::vector<std::vector<long>> residues;  // per element, one residue per modulus

  const std::vector<long>& project(std::size_t g) const { return residues.at(g); }
};

AbQuotient ab_quotient(const FiniteGroup& g, const SubgroupDatum& n);

// True when s is a maximal subgroup of g.
bool is_primitive(const FiniteGroup& g, const SubgroupDatum& s);

// Direct product acting on the disjoint union of the two point sets.
FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b,
                          std::size_t order_bound = kDefaultOrderBound);

// N x| H for action[h][x] = phi_h(x), indices of N elements, over all
// elements h of H. Realized on |N| + |H| points.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<std::size_t>>& action,
                               std::size_t order_bound = kDefaultOrderBound);

namespace families {

FiniteGroup cyclic(std::size_t d);
FiniteGroup dihedral(std::size_t d);
FiniteGroup symmetric(std::size_t d);
FiniteGroup alternating(std::size_t d);
FiniteGroup frobenius20();
FiniteGroup trivial(std::size_t d);
// One of the names above; frobenius20 requires d == 5.
FiniteGroup by_name(const std::string& name, std::size_t d);

}  // namespace families

// Units of Z/d.
std::vector<int> units_mod(int d);
// Subgroup of (Z/d)^x generated by gens.
std::vector<int> unit_subgroup(int d, const std::vector<int>& gens);

// Joint actions on the 2d points {f_0..f_{d-1}, g_0..g_{d-1}} of the two
// line sets.
namespace joint {

// (Z/d)^2 x| H with (a, b, n): i -> n i + a, j -> n j + b.
FiniteGroup diagonal(int d, const std::vector<int>& unit_gens);
// Both coordinates shifted together.
FiniteGroup same_shift(int d);
// Shift on the first coordinate only.
FiniteGroup first_shift(int d);

}  // namespace joint

}  // namespace diagbr
