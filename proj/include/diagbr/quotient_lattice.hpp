#pragma once

#include <cstddef>
#include <vector>

#include "diagbr/int_matrix.hpp"

namespace diagbr {

// Z^n / R for a relation lattice R spanned by given columns, presented by
// standard generators. Pivots are chosen by column echelon along a row
// priority list; when every pivot is a unit the non-pivot generators form
// a Z-basis of the quotient and reduce() is exact.
class QuotientLattice {
 public:
  QuotientLattice() = default;
  // priority lists ambient indices, earliest eliminated first; missing
  // indices are appended in natural order.
  explicit QuotientLattice(const IntMatrix& relations, std::vector<std::size_t> priority = {});

  std::size_t ambient_rank() const noexcept { return n_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  std::size_t relation_rank() const noexcept { return pivot_rows_.size(); }
  bool has_unit_pivots() const noexcept { return unit_pivots_; }

  // Ambient indices of the basis generators, ascending.
  const std::vector<std::size_t>& basis_generators() const noexcept { return basis_; }

  // Coordinates of the class of v in the basis. Requires unit pivots.
  IntVector reduce(const IntVector& v) const;
  IntVector reduce_generator(std::size_t k) const;
  // rank x n matrix of the projection Z^n -> quotient.
  IntMatrix projection() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> pivot_rows_;  // in elimination order
  std::vector<IntVector> pivot_cols_;    // matching echelon columns
  std::vector<std::size_t> basis_;
  std::vector<long> basis_position_;     // ambient index -> coordinate or -1
  bool unit_pivots_ = true;
};

}  // namespace diagbr
