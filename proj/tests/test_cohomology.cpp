#include <doctest.h>

#include <memory>

#include "diagbr/cohomology.hpp"
#include "diagbr/errors.hpp"
#include "diagbr/surface_lattices.hpp"

using namespace diagbr;

namespace {

GroupPtr ptr(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

IntMatrix cyclic_shift(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m((i + 1) % n, i) = 1;
  return m;
}

// Z[C_n] / Z.N on e_1..e_{n-1}, e_0 = -(e_1 + ... + e_{n-1}).
IntMatrix augmentation_quotient(std::size_t n) {
  IntMatrix m(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n - 1; ++i) m(i + 1, i) = 1;
  for (std::size_t i = 0; i < n - 1; ++i) m(i, n - 2) = -1;
  return m;
}

}  // namespace

TEST_CASE("sign module of C2") {
  const LatticeModule m(ptr(families::cyclic(2)), {IntMatrix{{-1}}});
  CHECK(h1(m) == FinAbGroup::cyclic(2));
  CHECK(h1_cyclic(IntMatrix{{-1}}, 2) == FinAbGroup::cyclic(2));
  CHECK(h1_cyclic(IntMatrix{{1}}, 2).is_trivial());
  CHECK(tate_h0_cyclic(IntMatrix{{1}}, 2) == FinAbGroup::cyclic(2));
  CHECK(invariants(m).cols() == 0);
}

TEST_CASE("regular and augmentation-quotient modules of cyclic groups") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto g = ptr(families::cyclic(n));
    const LatticeModule reg(g, {cyclic_shift(n)});
    CHECK(h1(reg).is_trivial());
    CHECK(invariants(reg).cols() == 1);
    const LatticeModule q(g, {augmentation_quotient(n)});
    const auto expect = FinAbGroup::cyclic(static_cast<long>(n));
    CHECK(h1(q) == expect);
    CHECK(h1_coboundary_torsion(q) == expect);
    CHECK(h1_cyclic(augmentation_quotient(n), n) == expect);
  }
}

TEST_CASE("element actions match words and both execution modes") {
  const LambdaLattice lam(4);
  const auto g = ptr(product_group(families::dihedral(4), families::cyclic(4)));
  const auto par = lam.module(g, ActionCache::all_elements, Exec::parallel);
  const auto ser = lam.module(g, ActionCache::all_elements, Exec::serial);
  const auto lazy = lam.module(g, ActionCache::generators_only);
  for (std::size_t x = 0; x < g->order(); ++x) {
    CHECK(par.action(x) == ser.action(x));
    CHECK(element_action(lazy, x) == par.action(x).to_int_matrix());
  }
  CHECK_THROWS(h1(lazy));
}

TEST_CASE("cocycle routes agree") {
  const LambdaLattice lam(3);
  for (const auto& g : {product_group(families::cyclic(3), families::cyclic(3)),
                        product_group(families::symmetric(3), families::cyclic(3)), joint::diagonal(3, {2})}) {
    const auto m = lam.module(ptr(g));
    H1Options ex;
    ex.exhaustive = true;
    const auto fast = h1_detailed(m);
    const auto full = h1_detailed(m, ex);
    CHECK(fast.group == full.group);
    CHECK(full.group == h1_coboundary_torsion(m));
    CHECK_FALSE(full.stopped_early);
  }
}

TEST_CASE("budgets and validation") {
  const LambdaLattice lam(3);
  const auto m = lam.module(ptr(product_group(families::cyclic(3), families::cyclic(3))));
  H1Options tight;
  tight.max_rank = 2;
  CHECK_THROWS_AS(h1(m, tight), BudgetExceeded);
  tight = {};
  tight.max_order = 4;
  CHECK_THROWS_AS(h1(m, tight), BudgetExceeded);
  // not unimodular
  CHECK_THROWS_AS(LatticeModule(ptr(families::cyclic(2)), {IntMatrix{{2}}}), InvalidInput);
  // does not respect the relation s^2 = 1
  CHECK_THROWS_AS(LatticeModule(ptr(families::cyclic(2)), {IntMatrix{{0, -1}, {1, 0}}}), InvalidInput);
}

TEST_CASE("cayley tree") {
  const auto g = families::symmetric(4);
  const auto t = cayley_tree(g);
  for (std::size_t h = 1; h < g.order(); ++h) {
    CHECK(g.right_gen(t.parent_element[h], t.parent_generator[h]) == h);
    CHECK(t.depth[h] == t.depth[t.parent_element[h]] + 1);
  }
}
