#include "diagbr/fermat_characters.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "diagbr/cyclotomic.hpp"
#include "diagbr/errors.hpp"
#include "diagbr/groups.hpp"

namespace diagbr {

namespace {

int md(long x, int d) { return static_cast<int>(((x % d) + d) % d); }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  using u128 = unsigned __int128;
  std::uint64_t r = 1 % p;
  a %= p;
  for (; e; e >>= 1, a = static_cast<std::uint64_t>(static_cast<u128>(a) * a % p))
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * a % p);
  return r;
}

// Quadruples found for one value of a1, in (a1, a2, a3) order.
std::vector<CharQuadruple> s_flat_slice(int d, int a1, const std::vector<int>& units) {
  std::vector<CharQuadruple> out;
  for (int a2 = 1; a2 < d; ++a2)
    for (int a3 = 1; a3 < d; ++a3) {
      const int a0 = md(-(a1 + a2 + a3), d);
      if (a0 == 0) continue;
      bool ok = true;
      for (int t : units) {
        const long s = (static_cast<long>(t) * a0) % d + (static_cast<long>(t) * a1) % d +
                       (static_cast<long>(t) * a2) % d + (static_cast<long>(t) * a3) % d;
        if (s != 2L * d) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back({d, {a0, a1, a2, a3}});
    }
  return out;
}

}  // namespace

std::string CharQuadruple::to_string() const {
  std::ostringstream os;
  os << '(' << a[0] << ',' << a[1] << ',' << a[2] << ',' << a[3] << ')';
  return os.str();
}

bool in_s_flat(const CharQuadruple& chi) {
  const int d = chi.d;
  if (d < 2) return false;
  for (int x : chi.a)
    if (x < 1 || x >= d) return false;
  for (int t : units_mod(d)) {
    long s = 0;
    for (int x : chi.a) s += (static_cast<long>(t) * x) % d;
    if (s != 2L * d) return false;
  }
  return true;
}

bool in_s_ind(const CharQuadruple& chi) {
  if (!in_s_flat(chi)) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (chi.a[static_cast<std::size_t>(i)] + chi.a[static_cast<std::size_t>(j)] == chi.d) return false;
  return true;
}

bool is_primitive_character(const CharQuadruple& chi) {
  return std::gcd(std::gcd(chi.a[0], chi.a[1]), std::gcd(chi.a[2], chi.a[3])) == 1;
}

CharQuadruple scale(const CharQuadruple& chi, int t) {
  CharQuadruple out{chi.d, {}};
  for (std::size_t i = 0; i < 4; ++i) out.a[i] = md(static_cast<long>(t) * chi.a[i], chi.d);
  return out;
}

std::vector<CharQuadruple> enumerate_s_flat(int d, Exec exec) {
  if (d < 1) throw InvalidInput("degree must be positive");
  if (d < 2) return {};
  const std::vector<int> units = units_mod(d);
  std::vector<std::vector<CharQuadruple>> slices(static_cast<std::size_t>(d));
  if (exec == Exec::serial) {
    for (int a1 = 1; a1 < d; ++a1) slices[static_cast<std::size_t>(a1)] = s_flat_slice(d, a1, units);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int a1 = 1; a1 < d; ++a1) slices[static_cast<std::size_t>(a1)] = s_flat_slice(d, a1, units);
  }
  std::vector<CharQuadruple> out;
  for (auto& s : slices) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t picard_number(int d, Exec exec) { return 1 + enumerate_s_flat(d, exec).size(); }

PrimitiveReduction reduce_to_primitive(const CharQuadruple& chi) {
  if (!in_s_flat(chi)) throw InvalidInput("character is not in S_flat");
  const int m = std::gcd(std::gcd(chi.a[0], chi.a[1]), std::gcd(chi.a[2], chi.a[3]));
  if (chi.d % m != 0) throw InternalError("gcd of a character does not divide d");
  PrimitiveReduction r;
  r.d = chi.d / m;
  r.chi = {r.d, {chi.a[0] / m, chi.a[1] / m, chi.a[2] / m, chi.a[3] / m}};
  if (!in_s_flat(r.chi)) throw InternalError("primitive reduction left S_flat");
  return r;
}

std::vector<CharQuadruple> s_ind(int d, Exec exec) {
  std::vector<CharQuadruple> out;
  for (const auto& chi : enumerate_s_flat(d, exec)) {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (chi.a[static_cast<std::size_t>(i)] + chi.a[static_cast<std::size_t>(j)] == d) {
          ok = false;
          break;
        }
    if (ok) out.push_back(chi);
  }
  return out;
}

namespace {

std::vector<CharQuadruple> s_reg_from(int d, const std::vector<CharQuadruple>& ind) {
  std::set<std::array<int, 4>> gen;
  auto add = [&](long x0, long x1, long x2, long x3) {
    std::array<int, 4> q{md(x0, d), md(x1, d), md(x2, d), md(x3, d)};
    for (int x : q)
      if (x == 0) return;
    std::sort(q.begin(), q.end());
    do {
      gen.insert(q);
    } while (std::next_permutation(q.begin(), q.end()));
  };
  auto excluded = [d](long i, int num, int den) {
    // i == num*d/den, only when that is an integer
    return (static_cast<long>(num) * d) % den == 0 && i == static_cast<long>(num) * d / den;
  };
  for (long i = 1; i < d; ++i) {
    if (d % 2 == 0) {
      const long h = d / 2;
      if (!excluded(i, 1, 4)) add(i, h + i, d - 2 * i, h);
      if (!excluded(i, 1, 3) && !excluded(i, 1, 4) && !excluded(i, 1, 6)) add(i, h + i, h + 2 * i, d - 4 * i);
    }
    if (d % 3 == 0) {
      const long t = d / 3;
      if (!excluded(i, 1, 6)) add(i, t + i, 2 * t + i, d - 3 * i);
    }
  }
  std::vector<CharQuadruple> out;
  for (const auto& chi : ind)
    if (gen.count(chi.a)) out.push_back(chi);
  return out;
}

}  // namespace

std::vector<CharQuadruple> s_reg(int d, Exec exec) { return s_reg_from(d, s_ind(d, exec)); }

std::vector<CharQuadruple> CharacterSets::unexplained() const {
  std::vector<CharQuadruple> out;
  for (const auto& chi : s_ind)
    if (is_primitive_character(chi) && !std::binary_search(s_reg.begin(), s_reg.end(), chi)) out.push_back(chi);
  return out;
}

CharacterSets character_sets(int d, Exec exec) {
  CharacterSets cs;
  cs.d = d;
  cs.s_flat = enumerate_s_flat(d, exec);
  for (const auto& chi : cs.s_flat) {
    if (is_primitive_character(chi)) cs.s_primitive.push_back(chi);
    bool ind = true;
    for (int i = 0; i < 4 && ind; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (chi.a[static_cast<std::size_t>(i)] + chi.a[static_cast<std::size_t>(j)] == d) ind = false;
    if (ind) cs.s_ind.push_back(chi);
  }
  cs.s_reg = s_reg_from(d, cs.s_ind);
  return cs;
}

std::vector<int> exceptional_scan(int lo, int hi, Exec exec) {
  std::vector<int> out;
  for (int d = std::max(lo, 1); d <= hi; ++d)
    if (!character_sets(d, exec).unexplained().empty()) out.push_back(d);
  return out;
}

ExceptionalTable load_exceptional_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open exceptional-degree table: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed exceptional-degree table: ") + e.what());
  }
  ExceptionalTable t;
  if (!j.is_object() || !j.contains("degrees") || !j["degrees"].is_array())
    throw InvalidInput("exceptional-degree table needs a \"degrees\" array");
  for (const auto& x : j["degrees"]) {
    if (!x.is_number_integer()) throw InvalidInput("exceptional degrees must be integers");
    t.degrees.push_back(x.get<int>());
  }
  t.provenance = j.value("provenance", std::string());
  std::sort(t.degrees.begin(), t.degrees.end());
  return t;
}

std::string field_case_name(FieldCase c) {
  switch (c) {
    case FieldCase::clause_i: return "clause_i";
    case FieldCase::clause_ii: return "clause_ii";
    case FieldCase::flagged: return "flagged";
  }
  return "?";
}

FieldReport field_report(int d, const ExceptionalTable* table) {
  if (d < 1) throw InvalidInput("degree must be positive");
  FieldReport r;
  r.d = d;
  const int w = root_of_unity_order(d);
  std::ostringstream bound;
  bound << "K = E(Delta^(1/" << w << ")), E = Q(mu_" << d << "), Delta generated by the units of E";
  std::vector<int> primes;
  for (int q = 2, n = d; q <= n; ++q)
    if (n % q == 0) {
      primes.push_back(q);
      while (n % q == 0) n /= q;
    }
  for (int q : primes) bound << " and 1 - zeta^" << d / q;
  r.bound_field = bound.str();

  const std::string mu = "Q(mu_" + std::to_string(2 * d);
  if (d <= 4 || std::gcd(6, d) == 1) {
    r.field_case = FieldCase::clause_i;
    r.field = mu + ")";
    return r;
  }
  r.adjoin_two = d % 2 == 0;
  r.adjoin_three = d % 3 == 0;
  if (r.adjoin_two) r.kummer_generators.push_back("2^(1/" + std::to_string(d / 2) + ")");
  if (r.adjoin_three) r.kummer_generators.push_back("3^(1/" + std::to_string(d / 3) + ")");

  std::vector<int> candidates;
  for (int e = 12; e <= std::min(d, 180); ++e)
    if (d % e == 0) candidates.push_back(e);
  if (!candidates.empty()) {
    if (!table) {
      r.table_missing = true;
      r.exceptional_divisors = candidates;
    } else {
      for (int e : candidates)
        if (std::binary_search(table->degrees.begin(), table->degrees.end(), e)) r.exceptional_divisors.push_back(e);
    }
  }
  if (!r.exceptional_divisors.empty()) {
    r.field_case = FieldCase::flagged;
    return r;
  }
  r.field_case = FieldCase::clause_ii;
  r.field = mu;
  for (const auto& k : r.kummer_generators) r.field += ", " + k;
  r.field += ")";
  return r;
}

bool FieldReport::splits_completely(std::uint64_t p) const {
  if (!closed_form()) throw InvalidInput("no closed form for the field of definition");
  if (p % static_cast<std::uint64_t>(2 * d) != 1) return false;
  if (field_case == FieldCase::clause_i) return true;
  // With mu_m in F_p, x^m = a is solvable iff a^{(p-1)/m} = 1.
  if (adjoin_two && powmod(2, (p - 1) / static_cast<std::uint64_t>(d / 2), p) != 1) return false;
  if (adjoin_three && powmod(3, (p - 1) / static_cast<std::uint64_t>(d / 3), p) != 1) return false;
  return true;
}

}  // namespace diagbr
