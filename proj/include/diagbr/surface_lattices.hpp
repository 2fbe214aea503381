#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "diagbr/cohomology.hpp"
#include "diagbr/cyclotomic.hpp"
#include "diagbr/fin_ab_group.hpp"
#include "diagbr/parallel.hpp"
#include "diagbr/quotient_lattice.hpp"

namespace diagbr {

// Lines L_ij (i, j in Z/d) sit at ambient index i*d + j; the hyperplane
// class h sits at d*d.
inline std::size_t line_index(int d, int i, int j) {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + static_cast<std::size_t>(j);
}

// Intersection number of two lines on the surface.
long line_intersection(int d, int i, int j, int r, int s);

// The lattice generated by the d^2 lines of the surface f(x) = g(y) and h,
// modulo sum_j L_ij = h and sum_i L_ij = h. Basis: L_ij with i, j >= 1 in
// lexicographic order, then h.
class LambdaLattice {
 public:
  explicit LambdaLattice(int d);

  int d() const noexcept { return d_; }
  std::size_t rank() const noexcept { return quotient_.rank(); }

  // (d^2 + 1) x 2d; column i < d is the f-root x_i, column d + j the g-root y_j.
  const IntMatrix& relation_matrix() const noexcept { return relations_; }
  // Generator of the kernel of the relation map: sum of f-roots minus sum of g-roots.
  IntVector root_kernel_vector() const;

  IntVector line(int i, int j) const;
  IntVector hyperplane() const;
  const IntMatrix& gram() const noexcept { return gram_; }

  // Matrix of the permutation of the 2d roots (first d: f, last d: g).
  IntMatrix action_of(std::span<const std::uint16_t> roots_perm) const;
  LatticeModule module(GroupPtr line_group, ActionCache cache = ActionCache::all_elements,
                       Exec exec = Exec::parallel) const;

 private:
  int d_;
  IntMatrix relations_;
  QuotientLattice quotient_;
  IntMatrix projection_;
  IntMatrix gram_;
};

// Z[V_f] (x) Z[V_g] modulo sigma_f (x) y and x (x) sigma_g; rank (d-1)^2 with
// basis e_i (x) e_j, i, j >= 1.
class TensorLattice {
 public:
  explicit TensorLattice(int d);

  int d() const noexcept { return d_; }
  std::size_t rank() const noexcept { return quotient_.rank(); }
  IntMatrix action_of(std::span<const std::uint16_t> roots_perm) const;
  LatticeModule module(GroupPtr line_group, ActionCache cache = ActionCache::all_elements,
                       Exec exec = Exec::parallel) const;

 private:
  int d_;
  QuotientLattice quotient_;
  IntMatrix projection_;
};

struct ExactnessAudit {
  bool composite_zero = false;   // relation map kills the kernel vector
  bool kernel_is_line = false;   // kernel is spanned by that vector
  FinAbGroup cokernel;           // should be free of rank (d-1)^2 + 1
  bool ok() const;
};
ExactnessAudit audit_lambda_exactness(int d);

// Z[(Z/d)^3] modulo the ideal generated by phi(u1), phi(u2), phi(u3) and
// phi(u1 u2 u3), where phi(x) = 1 + x + ... + x^{d-1}.
class FermatLatticeP {
 public:
  explicit FermatLatticeP(int d, int max_d = 6);

  int d() const noexcept { return d_; }
  std::size_t rank() const noexcept { return quotient_.rank(); }
  const IntMatrix& relations() const noexcept { return relations_; }
  // Matrix of multiplication by u_{k+1}, k in {0, 1, 2}.
  IntMatrix multiplication(int k) const;
  // Free abelian part check of the presentation by Smith form.
  FinAbGroup presentation_cokernel() const;
  // Module over (Z/d)^3 realized on 3d points.
  LatticeModule module(ActionCache cache = ActionCache::all_elements, Exec exec = Exec::parallel) const;

 private:
  int d_;
  IntMatrix relations_;
  QuotientLattice quotient_;
  IntMatrix projection_;
};

struct PCheck {
  int d = 0;
  std::size_t rank = 0;
  FinAbGroup h1_u2u3;          // H^1(<u2 u3>, P)
  std::size_t invariant_rank = 0;  // rank of P^{<u2 u3>}
  bool a_ok = false;           // h1_u2u3 trivial
  bool b_ok = false;           // invariant_rank == (d-1)^2
};
PCheck fermat_p_check(int d);
bool check_aC(int d);
bool check_bC(int d);

// sum over i,j,r,s of eps^{(i-r) l + (j-s) n} <L_ij, L_rs> in Z[eps], eps a
// primitive d-th root of unity.
CycInt omega_pairing(int d, int l, int n, Exec exec = Exec::parallel);

}  // namespace diagbr
