#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "diagbr/errors.hpp"
#include "diagbr/fermat_characters.hpp"
#include "diagbr/groups.hpp"
#include "oracles.hpp"

using namespace diagbr;

TEST_CASE("S_flat sizes against brute force") {
  // Frozen from oracle::s_flat_count; Picard numbers 1 + these.
  const int frozen[] = {0, 1, 6, 19, 36, 85, 90, 175, 216, 361, 270, 643};
  for (int d = 1; d <= 12; ++d) {
    CHECK(static_cast<int>(enumerate_s_flat(d).size()) == frozen[d - 1]);
    if (d <= 9) CHECK(oracle::s_flat_count(d) == frozen[d - 1]);
  }
  CHECK(picard_number(1) == 1);
  CHECK(picard_number(3) == 7);
  CHECK(picard_number(4) == 20);
}

TEST_CASE("S_flat for d = 3 is the six arrangements of (1,1,2,2)") {
  const auto s = enumerate_s_flat(3);
  REQUIRE(s.size() == 6);
  for (const auto& c : s) {
    auto a = c.a;
    std::sort(a.begin(), a.end());
    CHECK(a == std::array<int, 4>{1, 1, 2, 2});
  }
  CHECK(s_ind(3).empty());
}

TEST_CASE("serial and parallel enumeration agree") {
  for (int d : {6, 12, 17, 24}) CHECK(enumerate_s_flat(d, Exec::serial) == enumerate_s_flat(d, Exec::parallel));
}

TEST_CASE("membership predicates and stability") {
  for (int d = 2; d <= 20; ++d) {
    const auto cs = character_sets(d);
    for (const auto& c : cs.s_flat) {
      CHECK(in_s_flat(c));
      for (int t : units_mod(d)) CHECK(std::binary_search(cs.s_flat.begin(), cs.s_flat.end(), scale(c, t)));
      const auto r = reduce_to_primitive(c);
      CHECK(in_s_flat(r.chi));
      CHECK(is_primitive_character(r.chi));
    }
    for (const auto& c : cs.s_ind) CHECK(in_s_ind(c));
    CHECK(std::includes(cs.s_ind.begin(), cs.s_ind.end(), cs.s_reg.begin(), cs.s_reg.end()));
    CHECK(std::includes(cs.s_flat.begin(), cs.s_flat.end(), cs.s_ind.begin(), cs.s_ind.end()));
    for (const auto& c : cs.s_reg) {
      auto a = c.a;
      std::sort(a.begin(), a.end());
      do {
        CHECK(std::binary_search(cs.s_reg.begin(), cs.s_reg.end(), CharQuadruple{d, a}));
      } while (std::next_permutation(a.begin(), a.end()));
    }
    if (d % 2 != 0 && d % 3 != 0) CHECK(cs.s_reg.empty());
  }
}

TEST_CASE("primitive reduction") {
  const auto r = reduce_to_primitive({6, {2, 2, 4, 4}});
  CHECK(r.d == 3);
  CHECK(r.chi.a == std::array<int, 4>{1, 1, 2, 2});
  const auto q = reduce_to_primitive({4, {2, 2, 2, 2}});
  CHECK(q.d == 2);
  CHECK(q.chi.a == std::array<int, 4>{1, 1, 1, 1});
  const CharQuadruple p{5, {1, 1, 4, 4}};
  CHECK(reduce_to_primitive(p).chi == p);
  CHECK_THROWS_AS(reduce_to_primitive({5, {1, 1, 1, 2}}), InvalidInput);
}

TEST_CASE("regular families explain every primitive character below 12") {
  for (int d = 1; d < 12; ++d) CHECK(character_sets(d).unexplained().empty());
  CHECK_FALSE(character_sets(12).unexplained().empty());
}

TEST_CASE("field report") {
  CHECK(field_report(5, nullptr).field == "Q(mu_10)");
  CHECK(field_report(4, nullptr).field_case == FieldCase::clause_i);
  CHECK(field_report(8, nullptr).field == "Q(mu_16, 2^(1/4))");
  CHECK(field_report(9, nullptr).field == "Q(mu_18, 3^(1/3))");
  CHECK(field_report(6, nullptr).field == "Q(mu_12, 2^(1/3), 3^(1/2))");
  const auto missing = field_report(24, nullptr);
  CHECK(missing.field_case == FieldCase::flagged);
  CHECK(missing.table_missing);
  CHECK(missing.exceptional_divisors == std::vector<int>{12, 24});
  const ExceptionalTable none{{}, "empty"};
  CHECK(field_report(24, &none).field_case == FieldCase::clause_ii);
  const ExceptionalTable t{{12}, "test"};
  CHECK(field_report(24, &t).exceptional_divisors == std::vector<int>{12});
  CHECK(field_report(26, &t).closed_form());
  const auto r8 = field_report(8, nullptr);
  CHECK(r8.splits_completely(257) == (oracle::powmod(2, 64, 257) == 1));
  CHECK_FALSE(r8.splits_completely(41));
}

TEST_CASE("exceptional table file") {
  const auto path = std::filesystem::temp_directory_path() / "diagbr_table_test.json";
  {
    std::ofstream out(path);
    out << R"({"provenance": "unit test", "degrees": [20, 12]})";
  }
  const auto t = load_exceptional_table(path.string());
  CHECK(t.degrees == std::vector<int>{12, 20});
  CHECK(t.provenance == "unit test");
  {
    std::ofstream out(path);
    out << R"({"degrees": "x"})";
  }
  CHECK_THROWS_AS(load_exceptional_table(path.string()), InvalidInput);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_exceptional_table(path.string()), InvalidInput);
}

TEST_CASE("exceptional scan below 30") {
  CHECK(exceptional_scan(1, 30) == std::vector<int>{12, 14, 15, 18, 20, 21, 24, 28, 30});
}
