#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "diagbr/fin_ab_group.hpp"
#include "diagbr/int_matrix.hpp"

namespace diagbr {

// U * A * V = D, U and V unimodular, D diagonal with d_1 | d_2 | ... and
// d_i >= 0. Pivot choice is deterministic: smallest absolute value, ties
// to the lowest (row, col).
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Nonzero diagonal of the Smith form without tracking transforms.
std::vector<Int> smith_invariants(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

// Z^rows / (column span of a).
FinAbGroup cokernel_invariants(const IntMatrix& a);

// Columns form a Z-basis of {x : a x = 0}; the basis is saturated.
IntMatrix kernel_basis(const IntMatrix& a);

// Bareiss elimination.
Int determinant(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

// Y with basis * Y = targets, or nullopt if some target column is not in
// the Z-span of the (independent) basis columns.
std::optional<IntMatrix> lattice_coordinates(const IntMatrix& basis, const IntMatrix& targets);

// L / <gens> where L is spanned by the saturated columns of basis and
// every column of gens lies in L.
FinAbGroup subquotient(const IntMatrix& basis, const IntMatrix& gens);

// Independent columns spanning the same lattice as the columns of p.
IntMatrix column_span_basis(const IntMatrix& p);

IntMatrix inverse_unimodular(const IntMatrix& u);

// {t in Z/o_1 x ... x Z/o_n : m t = 0 mod modulus}, with one generator per
// invariant factor (entries reduced mod o_j). Requires o_j m e_j = 0 mod modulus.
struct TorsionKernel {
  FinAbGroup group;
  std::vector<IntVector> generators;
};
TorsionKernel kernel_mod(const IntMatrix& m, const std::vector<Int>& orders, const Int& modulus);

}  // namespace diagbr
