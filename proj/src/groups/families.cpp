#include <algorithm>
#include <numeric>

#include "diagbr/errors.hpp"
#include "diagbr/groups.hpp"

namespace diagbr {

namespace {

Perm shift(std::size_t d) {
  Perm p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = static_cast<std::uint16_t>((i + 1) % d);
  return p;
}

Perm identity_perm(std::size_t d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return p;
}

}  // namespace

namespace families {

FiniteGroup cyclic(std::size_t d) {
  return FiniteGroup::from_permutations(d, {shift(d)}, kDefaultOrderBound, "C" + std::to_string(d));
}

FiniteGroup dihedral(std::size_t d) {
  if (d < 3) throw InvalidInput("dihedral family needs d >= 3");
  Perm r(d);
  for (std::size_t i = 0; i < d; ++i) r[i] = static_cast<std::uint16_t>((d - i) % d);
  return FiniteGroup::from_permutations(d, {shift(d), r}, kDefaultOrderBound, "D" + std::to_string(d));
}

FiniteGroup symmetric(std::size_t d) {
  std::vector<Perm> gens{shift(d)};
  if (d >= 2) {
    Perm t = identity_perm(d);
    std::swap(t[0], t[1]);
    gens.push_back(t);
  }
  return FiniteGroup::from_permutations(d, gens, kDefaultOrderBound, "S" + std::to_string(d));
}

FiniteGroup alternating(std::size_t d) {
  if (d < 3) throw InvalidInput("alternating family needs d >= 3");
  Perm c3 = identity_perm(d);
  c3[0] = 1;
  c3[1] = 2;
  c3[2] = 0;
  // (0 1 ... d-1) is even for odd d; otherwise use (1 2 ... d-1).
  Perm big = identity_perm(d);
  if (d % 2 == 1) {
    big = shift(d);
  } else {
    for (std::size_t i = 1; i < d; ++i) big[i] = static_cast<std::uint16_t>(i + 1 < d ? i + 1 : 1);
  }
  return FiniteGroup::from_permutations(d, {c3, big}, kDefaultOrderBound, "A" + std::to_string(d));
}

FiniteGroup frobenius20() {
  Perm dbl(5);
  for (std::size_t i = 0; i < 5; ++i) dbl[i] = static_cast<std::uint16_t>((2 * i) % 5);
  return FiniteGroup::from_permutations(5, {shift(5), dbl}, kDefaultOrderBound, "F20");
}

FiniteGroup trivial(std::size_t d) {
  return FiniteGroup::from_permutations(d, {}, kDefaultOrderBound, "1");
}

FiniteGroup by_name(const std::string& name, std::size_t d) {
  if (name == "cyclic") return cyclic(d);
  if (name == "dihedral") return dihedral(d);
  if (name == "symmetric") return symmetric(d);
  if (name == "alternating") return alternating(d);
  if (name == "trivial") return trivial(d);
  if (name == "frobenius20") {
    if (d != 5) throw InvalidInput("frobenius20 acts on 5 points");
    return frobenius20();
  }
  throw InvalidInput("unknown group family: " + name);
}

}  // namespace families

std::vector<int> units_mod(int d) {
  if (d < 1) throw InvalidInput("modulus must be positive");
  if (d == 1) return {0};
  std::vector<int> u;
  for (int t = 1; t < d; ++t)
    if (std::gcd(t, d) == 1) u.push_back(t);
  return u;
}

std::vector<int> unit_subgroup(int d, const std::vector<int>& gens) {
  std::vector<bool> in(static_cast<std::size_t>(d), false);
  std::vector<int> list{1 % d};
  in[static_cast<std::size_t>(1 % d)] = true;
  for (std::size_t cur = 0; cur < list.size(); ++cur)
    for (int s : gens) {
      int r = ((s % d) + d) % d;
      if (std::gcd(r, d) != 1) throw InvalidInput("unit generator is not coprime to d");
      int y = static_cast<int>((static_cast<long>(list[cur]) * r) % d);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        list.push_back(y);
      }
    }
  std::sort(list.begin(), list.end());
  return list;
}

namespace joint {

namespace {

Perm two_sided(int d, auto f_map, auto g_map) {
  Perm p(static_cast<std::size_t>(2 * d));
  for (int i = 0; i < d; ++i) {
    p[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(f_map(i));
    p[static_cast<std::size_t>(d + i)] = static_cast<std::uint16_t>(d + g_map(i));
  }
  return p;
}

}  // namespace

FiniteGroup diagonal(int d, const std::vector<int>& unit_gens) {
  if (d < 2) throw InvalidInput("degree must be at least 2");
  auto id = [](int i) { return i; };
  auto sh = [d](int i) { return (i + 1) % d; };
  std::vector<Perm> gens{two_sided(d, sh, id), two_sided(d, id, sh)};
  for (int n : unit_gens) {
    int r = ((n % d) + d) % d;
    if (std::gcd(r, d) != 1) throw InvalidInput("scaling is not a unit mod d");
    auto sc = [d, r](int i) { return static_cast<int>((static_cast<long>(r) * i) % d); };
    gens.push_back(two_sided(d, sc, sc));
  }
  return FiniteGroup::from_permutations(static_cast<std::size_t>(2 * d), gens, kDefaultOrderBound,
                                        "(Z/" + std::to_string(d) + ")^2 x| H");
}

FiniteGroup same_shift(int d) {
  auto sh = [d](int i) { return (i + 1) % d; };
  return FiniteGroup::from_permutations(static_cast<std::size_t>(2 * d), {two_sided(d, sh, sh)},
                                        kDefaultOrderBound, "C" + std::to_string(d) + " diagonal");
}

FiniteGroup first_shift(int d) {
  auto id = [](int i) { return i; };
  auto sh = [d](int i) { return (i + 1) % d; };
  return FiniteGroup::from_permutations(static_cast<std::size_t>(2 * d), {two_sided(d, sh, id)},
                                        kDefaultOrderBound, "C" + std::to_string(d) + " x 1");
}

}  // namespace joint

}  // namespace diagbr
