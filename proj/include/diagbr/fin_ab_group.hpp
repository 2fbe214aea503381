#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diagbr/int_matrix.hpp"

namespace diagbr {

// Finitely generated abelian group Z^r x Z/n_1 x ... x Z/n_k with
// 1 < n_1 | n_2 | ... | n_k. The representation is canonical, so == is
// isomorphism.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  static FinAbGroup trivial() { return {}; }
  static FinAbGroup cyclic(const Int& n);
  static FinAbGroup free(std::size_t rank);
  // Any list of cyclic orders (0 means Z); normalized to a divisor chain.
  static FinAbGroup from_cyclic_orders(const std::vector<Int>& orders);
  static FinAbGroup product(const FinAbGroup& a, const FinAbGroup& b);
  // factors must already satisfy 1 < n_1 | n_2 | ...; throws otherwise.
  static FinAbGroup from_divisor_chain(std::vector<Int> factors, std::size_t free_rank);

  const std::vector<Int>& invariant_factors() const noexcept { return factors_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  bool is_trivial() const noexcept { return factors_.empty() && free_rank_ == 0; }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  Int order() const;     // throws InvalidInput when infinite
  Int exponent() const;  // throws InvalidInput when infinite

  // Subgroup of elements killed by r.
  FinAbGroup torsion_of(const Int& r) const;
  // True when this group is isomorphic to a subgroup of other (finite case).
  bool embeds_in(const FinAbGroup& other) const;

  std::vector<long> factors_as_long() const;
  std::string to_string() const;  // "0", "Z/2", "Z^3 x Z/2 x Z/4"

  bool operator==(const FinAbGroup& o) const;

 private:
  std::vector<Int> factors_;
  std::size_t free_rank_ = 0;
};

}  // namespace diagbr
