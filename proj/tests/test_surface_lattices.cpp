#include <doctest.h>

#include "diagbr/errors.hpp"
#include "diagbr/surface_lattices.hpp"

using namespace diagbr;

TEST_CASE("line lattice shape and intersection form") {
  for (int d = 2; d <= 6; ++d) {
    const LambdaLattice lam(d);
    CHECK(lam.rank() == static_cast<std::size_t>((d - 1) * (d - 1) + 1));
    CHECK(lam.relation_matrix().rows() == static_cast<std::size_t>(d * d + 1));
    CHECK(lam.relation_matrix().cols() == static_cast<std::size_t>(2 * d));
    CHECK((lam.relation_matrix() * lam.root_kernel_vector()) == IntVector(static_cast<std::size_t>(d * d + 1)));
    CHECK(line_intersection(d, 1, 2, 1, 2) == -(d - 2));
    CHECK(line_intersection(d, 0, 0, 1, 1) == 0);
    CHECK(line_intersection(d, 0, 0, 0, 1) == 1);
    CHECK(lam.gram() == lam.gram().transpose());
    CHECK(audit_lambda_exactness(d).ok());
  }
}

TEST_CASE("gram matrix is invariant under the joint action") {
  const int d = 4;
  const LambdaLattice lam(d);
  const auto g = joint::diagonal(d, {3});
  for (std::size_t k = 0; k < g.num_generators(); ++k) {
    const auto a = lam.action_of(g.perm(g.generator(k)));
    CHECK(a.transpose() * lam.gram() * a == lam.gram());
  }
  Perm mixed(2 * d);
  for (int i = 0; i < 2 * d; ++i) mixed[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>((i + 1) % (2 * d));
  CHECK_THROWS_AS(lam.action_of(mixed), InvalidInput);
}

TEST_CASE("tensor lattice rank") {
  for (int d = 2; d <= 5; ++d) CHECK(TensorLattice(d).rank() == static_cast<std::size_t>((d - 1) * (d - 1)));
}

TEST_CASE("module P: rank and the two claims") {
  // Ranks b2 - 1 for d = 2..6, frozen from the Smith-form computation.
  const std::size_t expected[] = {1, 6, 21, 52, 105};
  for (int d = 2; d <= 5; ++d) {
    const FermatLatticeP p(d);
    CHECK(p.rank() == expected[d - 2]);
    const auto pc = fermat_p_check(d);
    CHECK(pc.a_ok);
    CHECK(pc.b_ok);
    CHECK(pc.invariant_rank == static_cast<std::size_t>((d - 1) * (d - 1)));
  }
}

TEST_CASE("omega pairing") {
  CHECK(omega_pairing(3, 1, 1) == CycInt::from_int(3, -27));
  CHECK(omega_pairing(4, 1, 3) == CycInt::from_int(4, -64));
  for (int d = 3; d <= 6; ++d)
    for (int l = 1; l < d; ++l)
      for (int n = 1; n < d; ++n) {
        const auto s = omega_pairing(d, l, n, Exec::serial);
        CHECK(s == omega_pairing(d, l, n, Exec::parallel));
        CHECK(s == CycInt::from_int(d, Int(-d * d * d)));
      }
}
