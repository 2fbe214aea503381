#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diagbr/parallel.hpp"

namespace diagbr {

// (a0, a1, a2, a3) with entries in [1, d-1].
struct CharQuadruple {
  int d = 0;
  std::array<int, 4> a{};

  auto operator<=>(const CharQuadruple&) const = default;
  std::string to_string() const;
};

bool in_s_flat(const CharQuadruple& chi);
bool in_s_ind(const CharQuadruple& chi);
bool is_primitive_character(const CharQuadruple& chi);
// chi scaled by the unit t, entries reduced into [1, d-1].
CharQuadruple scale(const CharQuadruple& chi, int t);

std::vector<CharQuadruple> enumerate_s_flat(int d, Exec exec = Exec::parallel);
std::size_t picard_number(int d, Exec exec = Exec::parallel);

struct PrimitiveReduction {
  int d = 0;
  CharQuadruple chi;
};
PrimitiveReduction reduce_to_primitive(const CharQuadruple& chi);

std::vector<CharQuadruple> s_ind(int d, Exec exec = Exec::parallel);
// Family members, entries reduced mod d, zeros dropped, closed under the
// 24 permutations, intersected with S_ind.
std::vector<CharQuadruple> s_reg(int d, Exec exec = Exec::parallel);

struct CharacterSets {
  int d = 0;
  std::vector<CharQuadruple> s_flat;
  std::vector<CharQuadruple> s_primitive;
  std::vector<CharQuadruple> s_ind;
  std::vector<CharQuadruple> s_reg;

  // Primitive members of S_ind that no family accounts for.
  std::vector<CharQuadruple> unexplained() const;
};
CharacterSets character_sets(int d, Exec exec = Exec::parallel);

// Degrees in [lo, hi] with a primitive member of S_ind outside S_reg.
std::vector<int> exceptional_scan(int lo, int hi, Exec exec = Exec::parallel);

struct ExceptionalTable {
  std::vector<int> degrees;
  std::string provenance;
};
ExceptionalTable load_exceptional_table(const std::string& path);

enum class FieldCase { clause_i, clause_ii, flagged };

struct FieldReport {
  int d = 0;
  FieldCase field_case = FieldCase::flagged;
  std::string field;                      // closed form, empty when flagged
  std::vector<std::string> kummer_generators;
  std::vector<int> exceptional_divisors;  // divisors of d needing external data
  bool table_missing = false;
  std::string bound_field;                // K = E(Delta^{1/w})
  bool adjoin_two = false;                // 2^{2/d}
  bool adjoin_three = false;              // 3^{3/d}

  bool closed_form() const { return field_case != FieldCase::flagged; }
  // Whether p (p = 1 mod w) splits completely in the closed-form field.
  bool splits_completely(std::uint64_t p) const;
};

FieldReport field_report(int d, const ExceptionalTable* table);
std::string field_case_name(FieldCase c);

}  // namespace diagbr
