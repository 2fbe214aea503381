#include <doctest.h>

#include <random>

#include "diagbr/errors.hpp"
#include "diagbr/fin_ab_group.hpp"
#include "diagbr/mat64.hpp"
#include "diagbr/quotient_lattice.hpp"
#include "diagbr/smith.hpp"
#include "oracles.hpp"

using namespace diagbr;

namespace {

bool is_smith_diagonal(const IntMatrix& d, std::size_t rank) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  for (std::size_t i = 0; i < rank; ++i) {
    if (d(i, i) <= 0) return false;
    if (i + 1 < rank && d(i + 1, i + 1) % d(i, i) != 0) return false;
  }
  for (std::size_t i = rank; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("smith form of a worked example") {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto s = smith_normal_form(a);
  CHECK(s.diagonal() == std::vector<Int>{2, 6, 12});
  CHECK(s.U * a * s.V == s.D);
  CHECK(is_unimodular(s.U));
  CHECK(is_unimodular(s.V));
}

TEST_CASE("smith form edge shapes") {
  CHECK(smith_invariants(IntMatrix(0, 3)).empty());
  CHECK(smith_invariants(IntMatrix(3, 3)).empty());
  CHECK(rank(IntMatrix{{0, 0}, {0, 5}}) == 1);
  CHECK(cokernel_invariants(IntMatrix{{2, 0}, {0, 3}}) == FinAbGroup::cyclic(6));
  CHECK(cokernel_invariants(IntMatrix(2, 0)) == FinAbGroup::free(2));
  CHECK(cokernel_invariants(IntMatrix{{-1}}).is_trivial());
}

TEST_CASE("randomized smith properties against determinantal divisors") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const auto a = oracle::random_matrix(rng, r, c, -9, 9);
    const auto s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(is_smith_diagonal(s.D, s.rank));
    CHECK(s.diagonal() == oracle::invariant_factors_by_minors(a));
  }
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto a = oracle::random_matrix(rng, n, n, -20, 20);
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    CHECK(determinant(a) == oracle::det_laplace(rows));
  }
}

TEST_CASE("kernel basis is saturated and complete") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 7;
    auto a = oracle::random_matrix(rng, r, c, -6, 6);
    if (r > 1) a = vstack(a, a.block(0, 0, 1, c));  // force a dependency
    const auto k = kernel_basis(a);
    CHECK(k.cols() == c - rank(a));
    CHECK((a * k).is_zero());
    for (const auto& x : smith_invariants(k)) CHECK(x == 1);
  }
}

TEST_CASE("lattice coordinates and subquotients") {
  const IntMatrix basis{{1, 0}, {1, 2}, {0, 1}};
  const IntMatrix targets{{3}, {7}, {2}};
  const auto y = lattice_coordinates(basis, targets);
  REQUIRE(y);
  CHECK(basis * *y == targets);
  CHECK_FALSE(lattice_coordinates(basis, IntMatrix{{1}, {0}, {0}}));
  CHECK(subquotient(IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 4}}) == FinAbGroup::from_cyclic_orders({2, 4}));
}

TEST_CASE("column span basis and unimodular inverse") {
  const IntMatrix p{{2, 4, 6}, {0, 3, 3}};
  const auto b = column_span_basis(p);
  CHECK(b.cols() == 2);
  CHECK(lattice_coordinates(b, p));
  const IntMatrix u{{2, 1}, {1, 1}};
  CHECK((inverse_unimodular(u) * u).is_identity());
}

TEST_CASE("torsion kernel mod n") {
  // {t in Z/4 x Z/2 : t1 + 2 t2 = 0 mod 4} = {(0,0), (2,1)}
  const auto k = kernel_mod(IntMatrix{{1, 2}}, {4, 2}, 4);
  CHECK(k.group == FinAbGroup::cyclic(2));
  REQUIRE(k.generators.size() == 1);
  CHECK(k.generators[0] == IntVector{2, 1});
  const auto all = kernel_mod(IntMatrix{{2, 2}}, {4, 2}, 4);
  CHECK(all.group == FinAbGroup::cyclic(4));  // generated by (1, 1)
}

TEST_CASE("finite abelian groups") {
  const auto g = FinAbGroup::from_cyclic_orders({4, 6});
  CHECK(g.to_string() == "Z/2 x Z/12");
  CHECK(g.order() == 24);
  CHECK(g.exponent() == 12);
  CHECK(g.torsion_of(2) == FinAbGroup::from_cyclic_orders({2, 2}));
  CHECK(FinAbGroup::cyclic(4).embeds_in(g));
  CHECK_FALSE(FinAbGroup::cyclic(8).embeds_in(g));
  CHECK(FinAbGroup::product(FinAbGroup::cyclic(2), FinAbGroup::cyclic(3)) == FinAbGroup::cyclic(6));
  CHECK(FinAbGroup::cyclic(1).is_trivial());
  CHECK_THROWS_AS(FinAbGroup::free(1).order(), InvalidInput);
  CHECK_THROWS_AS(FinAbGroup::from_divisor_chain({4, 6}, 0), InvalidInput);
}

TEST_CASE("quotient lattice with unit pivots") {
  // Z^3 / <e0 - e1, e1 - e2> = Z
  const IntMatrix rel{{1, 0}, {-1, 1}, {0, -1}};
  const QuotientLattice q(rel);
  CHECK(q.rank() == 1);
  CHECK(q.has_unit_pivots());
  const auto p = q.projection();
  CHECK((p * rel).is_zero());
  CHECK(q.reduce(IntVector{1, 1, 1}) == IntVector{3});
}

TEST_CASE("checked int64 arithmetic") {
  CHECK(checked_mul(1L << 31, 1L << 31) == (1L << 62));
  CHECK_THROWS_AS(checked_mul(1L << 32, 1L << 32), Overflow);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), Overflow);
  IntMatrix big{{1}};
  big(0, 0) = Int("100000000000000000000");
  CHECK_THROWS_AS(Mat64::from(big), Overflow);
  const IntMatrix m{{1, 2}, {3, 4}};
  CHECK((Mat64::from(m) * Mat64::from(m)).to_int_matrix() == m * m);
}
