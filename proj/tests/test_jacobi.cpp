#include <doctest.h>

#include <numeric>

#include "diagbr/errors.hpp"
#include "diagbr/groups.hpp"
#include "diagbr/jacobi_sums.hpp"
#include "oracles.hpp"

using namespace diagbr;

namespace {

std::vector<std::uint64_t> primes_of(const std::vector<SplitPrimeDatum>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& q : v) out.push_back(q.p);
  return out;
}

int inverse_mod(int u, int d) {
  for (int v = 1; v < d; ++v)
    if (u * v % d == 1) return v;
  return 0;
}

}  // namespace

TEST_CASE("split primes and their data") {
  CHECK(primes_of(find_split_primes(3, 20)) == std::vector<std::uint64_t>{7, 13, 19});
  CHECK(primes_of(find_split_primes(4, 20)) == std::vector<std::uint64_t>{5, 13, 17});
  CHECK(find_split_primes(5, 2).empty());
  for (const auto& q : find_split_primes(12, 500)) {
    CHECK(oracle::powmod(q.r, 12, q.p) == 1);
    for (int k = 1; k < 12; ++k) CHECK(oracle::powmod(q.r, static_cast<std::uint64_t>(k), q.p) != 1);
    CHECK(q.r == q.r_w);
  }
  for (const auto& q : find_split_primes(5, 500)) CHECK(oracle::powmod(q.r_w, 2, q.p) == q.r);
  CHECK_THROWS_AS(split_prime_datum(3, 7, 2), InvalidInput);  // 2 has order 3 mod 7
}

TEST_CASE("residue symbols") {
  const PrimeContext ctx(find_split_primes(3, 7).at(0));
  CHECK(ctx.prime().g == 3);
  CHECK(ctx.prime().r == 2);
  CHECK(residue_symbol(1, ctx, 3) == 0);
  CHECK(residue_symbol(3, ctx, 6) == 1);
  CHECK(residue_symbol(2, ctx, 3) == 2);
  CHECK_THROWS_AS(residue_symbol(0, ctx, 3), InvalidInput);
}

TEST_CASE("Jacobi sums agree with an independent triple sum") {
  for (int d : {3, 4, 5, 8}) {
    for (const auto& q : find_split_primes(d, 60)) {
      const PrimeContext ctx(q);
      for (int a1 = 0; a1 < d; ++a1)
        for (int a2 = 0; a2 < d; ++a2)
          for (int a3 = 0; a3 < d; a3 += 1 + d / 4) {
            const CharQuadruple chi{d, {((3 * d - a1 - a2 - a3) % d), a1, a2, a3}};
            const auto expect = CycInt::from_exponent_counts(d, oracle::jacobi_counts(d, q.p, q.r, a1, a2, a3));
            CHECK(jacobi_sum(chi, ctx) == expect);
            CHECK(jacobi_sum_reference(chi, ctx) == expect);
          }
    }
  }
}

TEST_CASE("reduction validated on primes up to 200") {
  for (int d = 3; d <= 8; ++d) CHECK(validate_jacobi_reduction(d, 200).empty());
}

TEST_CASE("absolute values") {
  const PrimeContext c7(find_split_primes(3, 7).at(0));
  const auto j = jacobi_sum({3, {1, 1, 2, 2}}, c7);
  CHECK(j * complex_conjugate(j) == CycInt::from_int(3, 49));
  const PrimeContext c5(find_split_primes(4, 5).at(0));
  CHECK(norm_to_int(jacobi_sum({4, {1, 1, 1, 1}}, c5)) == 25);
  // permuting a1, a2, a3 permutes the solution set
  const PrimeContext c13(find_split_primes(4, 13).at(1));
  CHECK(jacobi_sum({4, {2, 1, 2, 3}}, c13) == jacobi_sum({4, {2, 3, 1, 2}}, c13));
}

TEST_CASE("the homogeneous sum vanishes on S_flat") {
  for (int d : {3, 4, 5}) {
    const PrimeContext ctx(find_split_primes(d, 40).at(0));
    for (const auto& chi : enumerate_s_flat(d)) CHECK(jacobi_sum_homogeneous(chi, ctx).is_zero());
  }
}

TEST_CASE("h values") {
  const PrimeContext c7(find_split_primes(3, 7).at(0));
  for (const auto& chi : enumerate_s_flat(3)) CHECK(h_value(chi, c7).is_one());
  const PrimeContext c13(find_split_primes(4, 13).at(1));
  bool nontrivial = false;
  for (const auto& chi : enumerate_s_flat(4)) {
    const auto h = h_value(chi, c13);
    REQUIRE(h.h_root);
    if (is_primitive_character(chi) && !h.is_one()) nontrivial = true;
  }
  CHECK(nontrivial);
  const auto ref = h_value({4, {1, 1, 3, 3}}, c13, JacobiMethod::reference);
  CHECK(ref.j == h_value({4, {1, 1, 3, 3}}, c13).j);
}

TEST_CASE("purity separates S_flat") {
  const int d = 5;
  const CharQuadruple chi{d, {1, 1, 1, 2}};  // a1 + a2 + a3 = 4, entries nonzero
  REQUIRE_FALSE(in_s_flat(chi));
  bool some_fail = false;
  for (const auto& q : find_split_primes(d, 200)) {
    const PrimeContext ctx(q);
    const auto v = h_value(chi, ctx);
    CHECK(norm_to_int(v.j) == Int(static_cast<unsigned long>(q.p * q.p * q.p * q.p)));
    if (!v.divisible) some_fail = true;
  }
  CHECK(some_fail);
}

TEST_CASE("galois equivariance and auxiliary choices") {
  for (int d : {5, 8, 12}) {
    const auto chars = enumerate_s_flat(d);
    for (const auto& q : find_split_primes(d, 200)) {
      const PrimeContext ctx(q);
      for (std::size_t k = 0; k < chars.size(); k += 7) {
        const auto h = h_value(chars[k], ctx);
        REQUIRE(h.h);
        for (int t : units_mod(d)) CHECK(*h_value(scale(chars[k], t), ctx).h == galois_apply(t, *h.h));
      }
      // g' = g^u: r' = r^u, so psi' is psi under sigma_{u^{-1}}.
      for (std::uint64_t u = 2; u < q.p - 1; ++u) {
        if (std::gcd(u, q.p - 1) != 1) continue;
        const PrimeContext alt(split_prime_datum(d, q.p, oracle::powmod(q.g, u, q.p)));
        const int inv = inverse_mod(static_cast<int>(u % static_cast<std::uint64_t>(d)), d);
        const auto h = h_value(chars[0], ctx);
        CHECK(*h_value(chars[0], alt).h == galois_apply(inv, *h.h));
        if (u % static_cast<std::uint64_t>(d) == 1) CHECK(alt.prime().r == q.r);
        if (u > 40) break;
      }
    }
  }
}

TEST_CASE("serial and parallel tables agree") {
  const auto chars = enumerate_s_flat(8);
  const auto primes = find_split_primes(8, 600);
  const auto a = h_table(8, chars, primes, Exec::serial);
  const auto b = h_table(8, chars, primes, Exec::parallel);
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    CHECK(a.values[i].j == b.values[i].j);
    CHECK(a.values[i].h_root == b.values[i].h_root);
  }
}

TEST_CASE("Delta generators") {
  const auto g = default_delta_generators(12);
  CHECK(g.elements.size() == 12);
  CHECK(g.labels.front().rfind("eta", 0) == 0);
  for (int d : {5, 8, 12}) {
    const auto gens = default_delta_generators(d);
    // the cyclotomic units are units
    for (std::size_t k = 1; k < gens.elements.size(); ++k)
      if (gens.labels[k].find("/(1-zeta)") != std::string::npos) CHECK(abs(norm_to_int(gens.elements[k])) == 1);
  }
  CHECK_THROWS_AS(delta_generators_from(4, {{1, 2}}), InvalidInput);
}

TEST_CASE("Kummer consistency detects a planted counterexample") {
  const int d = 4;
  std::vector<CharQuadruple> prim;
  for (const auto& c : enumerate_s_flat(d))
    if (is_primitive_character(c)) prim.push_back(c);
  auto table = h_table(d, prim, find_split_primes(d, 400));
  const auto gens = default_delta_generators(d);
  CHECK(kummer_consistency_test(table, gens).ok());
  // h at a prime with trivial signature must be 1
  for (std::size_t i = 0; i < table.primes.size(); ++i) {
    if (table.at(i, 0).is_one()) {
      table.values[i * prim.size()].h_root = 2;
      break;
    }
  }
  CHECK_FALSE(kummer_consistency_test(table, gens).ok());
}

TEST_CASE("prime generators and the congruence test") {
  const auto q = find_split_primes(4, 13).at(1);
  const auto s = find_prime_generator(q);
  REQUIRE(s.pi);
  CHECK(norm_to_int(*s.pi) == 13);
  CHECK(eval_mod_p(*s.pi, q.r, q.p) == 0);
  for (int d : {3, 4}) {
    const auto t = h_table(d, enumerate_s_flat(d), find_split_primes(d, 600));
    const auto v = grossencharacter_congruence_test(t);
    CHECK(v.ok());
    CHECK(v.primes_skipped.empty());
    CHECK(v.modulus == 2 * root_of_unity_order(d) * root_of_unity_order(d));
  }
}
