#include <doctest.h>

#include "diagbr/brauer_formulas.hpp"
#include "diagbr/errors.hpp"

using namespace diagbr;

namespace {

GaloisDatum datum(const char* family, int d) {
  return GaloisDatum(std::make_shared<const FiniteGroup>(families::by_name(family, static_cast<std::size_t>(d))));
}

}  // namespace

TEST_CASE("pi for cyclic pairs") {
  for (int d = 2; d <= 9; ++d) {
    const auto pi = pi_group(datum("cyclic", d), datum("cyclic", d)).pi;
    CHECK(pi == FinAbGroup::cyclic(d % 2 ? d : d / 2));
  }
}

TEST_CASE("pi vanishes next to a primitive group") {
  CHECK(pi_group(datum("symmetric", 3), datum("cyclic", 3)).pi.is_trivial());
  CHECK(pi_group(datum("frobenius20", 5), datum("cyclic", 5)).pi.is_trivial());
  CHECK(pi_group(datum("symmetric", 4), datum("dihedral", 4)).pi.is_trivial());
  CHECK(datum("symmetric", 4).primitive());
  CHECK_FALSE(datum("dihedral", 4).primitive());
}

TEST_CASE("pi values frozen from the oracle") {
  CHECK(pi_group(datum("dihedral", 4), datum("cyclic", 4)).pi == FinAbGroup::cyclic(2));
  CHECK(pi_group(datum("dihedral", 4), datum("dihedral", 4)).pi == FinAbGroup::cyclic(2));
  CHECK(pi_group(datum("dihedral", 6), datum("cyclic", 6)).pi.is_trivial());
  CHECK(pi_group(datum("alternating", 4), datum("cyclic", 4)).pi.is_trivial());
}

TEST_CASE("coset-sum map") {
  const auto f = datum("cyclic", 4), g = datum("cyclic", 4);
  BilinearClass phi{4, {4}, {4}, {{1}}};
  REQUIRE(phi.well_formed());
  CHECK(chi_phi(f, g, phi, f.group().generator(0), 0) == 2);
  BilinearClass zero{4, {4}, {4}, {{0}}};
  CHECK(chi_phi(f, g, zero, 1, 1) == 0);
  const auto f5 = datum("cyclic", 5), g5 = datum("cyclic", 5);
  BilinearClass phi5{5, {5}, {5}, {{2}}};
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) CHECK(chi_phi(f5, g5, phi5, a, b) == 0);
  // every generator of Pi has vanishing coset sums
  for (const auto& c : pi_group(f, g).generators)
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) CHECK(chi_phi(f, g, c, a, b) == 0);
}

TEST_CASE("coprime shortcut") {
  CHECK(coprime_shortcut(datum("symmetric", 3), datum("cyclic", 3)));
  CHECK_FALSE(coprime_shortcut(datum("cyclic", 4), datum("cyclic", 4)));
}

TEST_CASE("diagonal formula and regimes") {
  CHECK(h1_pic_diagonal(7, {1}) == FinAbGroup::cyclic(7));
  CHECK(h1_pic_diagonal(8, {1}) == FinAbGroup::cyclic(4));
  CHECK(h1_pic_diagonal(5, units_mod(5)).is_trivial());
  CHECK(brauer_quotient_diagonal(8, {1}, Regime::number_field).br1_quotient == FinAbGroup::cyclic(4));
  CHECK(brauer_quotient_diagonal(6, {1}, Regime::generic_function_field).br1_quotient.is_trivial());
  CHECK(brauer_quotient_diagonal(8, {1}, Regime::custom_r, 2).br1_quotient == FinAbGroup::cyclic(2));
  CHECK_THROWS_AS(brauer_quotient_diagonal(8, {1}, Regime::custom_r, 3), InvalidInput);
  CHECK(parse_regime(regime_name(Regime::custom_r)) == Regime::custom_r);
  for (int d = 2; d <= 12; ++d)
    for (auto reg : {Regime::number_field, Regime::generic_function_field}) {
      const auto b = brauer_quotient_diagonal(d, {1}, reg);
      CHECK(b.br1_quotient.embeds_in(b.h1_pic));
    }
}

TEST_CASE("k = Q table") {
  CHECK(k_rational_case(12) == FinAbGroup::cyclic(6));
  CHECK(k_rational_case(24) == FinAbGroup::cyclic(12));
  CHECK(k_rational_case(5).is_trivial());
  // The theorem route and the a/b rule part ways exactly at 16 | d.
  for (int d = 1; d <= 48; ++d) CHECK((k_rational_case(d) == k_rational_theorem(d)) == (d % 16 != 0));
  CHECK(k_rational_theorem(16) == FinAbGroup::cyclic(8));
}

TEST_CASE("special configurations") {
  for (int d = 3; d <= 5; ++d) {
    CHECK(special_case_expectations(d, SpecialCase::same_cyclic_field).is_trivial());
    std::vector<Int> orders(static_cast<std::size_t>(d - 2), Int(d));
    CHECK(special_case_expectations(d, SpecialCase::cyclic_times_split) == FinAbGroup::from_cyclic_orders(orders));
  }
  CHECK(parse_special_case("split") == SpecialCase::cyclic_times_split);
  CHECK_THROWS_AS(parse_special_case("other"), InvalidInput);
}

TEST_CASE("small crosschecks") {
  CHECK(crosscheck_product(datum("cyclic", 3), datum("cyclic", 3)).equal);
  CHECK(crosscheck_diagonal(4, units_mod(4)).equal);
  CHECK(crosscheck_special(3, SpecialCase::cyclic_times_split).equal);
}
