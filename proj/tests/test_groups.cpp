#include <doctest.h>

#include "diagbr/errors.hpp"
#include "diagbr/groups.hpp"

using namespace diagbr;

TEST_CASE("family orders") {
  CHECK(families::cyclic(7).order() == 7);
  CHECK(families::dihedral(5).order() == 10);
  CHECK(families::symmetric(5).order() == 120);
  CHECK(families::alternating(5).order() == 60);
  CHECK(families::frobenius20().order() == 20);
  CHECK(families::trivial(4).order() == 1);
  CHECK_THROWS_AS(families::by_name("frobenius20", 6), InvalidInput);
  CHECK_THROWS_AS(families::by_name("nope", 3), InvalidInput);
}

TEST_CASE("group axioms on S4") {
  const auto g = families::symmetric(4);
  CHECK(g.perm(g.identity())[2] == 2);
  for (std::size_t a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inverse(a)) == g.identity());
    for (std::size_t k = 0; k < g.num_generators(); ++k) CHECK(g.right_gen(a, k) == g.mul(a, g.generator(k)));
  }
  // (a*b)(i) = a(b(i))
  const std::size_t a = 5, b = 11;
  for (std::size_t i = 0; i < 4; ++i) CHECK(g.apply(g.mul(a, b), i) == g.apply(a, g.apply(b, i)));
  CHECK(g.is_transitive());
}

TEST_CASE("order bound is enforced") {
  CHECK_THROWS_AS(FiniteGroup::from_permutations(6, {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}}, 100), BudgetExceeded);
  CHECK_THROWS_AS(FiniteGroup::from_permutations(3, {{0, 0, 1}}), InvalidInput);
}

TEST_CASE("subgroups, normality and primitivity") {
  const auto s4 = families::symmetric(4);
  const auto stab = point_stabilizer(s4, 0);
  CHECK(stab.size() == 6);
  CHECK_FALSE(is_normal(s4, stab));
  CHECK(is_primitive(s4, stab));
  CHECK(normal_closure(s4, stab.members).size() == 24);
  const auto d4 = families::dihedral(4);
  CHECK_FALSE(is_primitive(d4, point_stabilizer(d4, 0)));
  const auto gens = small_generating_set(s4, whole_group(s4));
  CHECK(generate_subgroup(s4, gens).size() == 24);
}

TEST_CASE("abelianized quotients") {
  CHECK(ab_quotient(families::symmetric(4), trivial_subgroup()).group == FinAbGroup::cyclic(2));
  CHECK(ab_quotient(families::dihedral(4), trivial_subgroup()).group == FinAbGroup::from_cyclic_orders({2, 2}));
  CHECK(ab_quotient(families::cyclic(6), trivial_subgroup()).group == FinAbGroup::cyclic(6));
  CHECK(ab_quotient(families::alternating(5), trivial_subgroup()).group.is_trivial());
  // projection is a homomorphism
  const auto g = families::frobenius20();
  const auto q = ab_quotient(g, trivial_subgroup());
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      for (std::size_t i = 0; i < q.moduli.size(); ++i)
        CHECK((q.project(a)[i] + q.project(b)[i]) % q.moduli[i] == q.project(g.mul(a, b))[i]);
}

TEST_CASE("products and joint actions") {
  const auto p = product_group(families::cyclic(3), families::symmetric(3));
  CHECK(p.order() == 18);
  CHECK(p.degree() == 6);
  CHECK_FALSE(p.is_transitive());
  CHECK(joint::diagonal(5, {2}).order() == 100);
  CHECK(joint::diagonal(8, {3, 5}).order() == 256);
  CHECK(joint::same_shift(4).order() == 4);
  CHECK(joint::first_shift(4).order() == 4);
  CHECK(units_mod(12) == std::vector<int>{1, 5, 7, 11});
  CHECK(unit_subgroup(7, {2}) == std::vector<int>{1, 2, 4});
}
