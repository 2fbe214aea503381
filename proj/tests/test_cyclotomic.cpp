#include <doctest.h>

#include <random>

#include "diagbr/cyclotomic.hpp"
#include "diagbr/errors.hpp"

using namespace diagbr;

namespace {

CycInt random_element(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<long> dist(-5, 5);
  std::vector<Int> c(static_cast<std::size_t>(euler_phi(d)));
  for (auto& x : c) x = dist(rng);
  return CycInt::from_coeffs(d, c);
}

// Primes p = 1 mod d with an element r of order d.
std::vector<std::pair<std::uint64_t, std::uint64_t>> embeddings(int d) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t p = 2; out.size() < 3; ++p) {
    bool prime = true;
    for (std::uint64_t q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime || (p - 1) % static_cast<std::uint64_t>(d) != 0) continue;
    for (std::uint64_t g = 2; g < p; ++g) {
      std::uint64_t r = 1;
      for (std::uint64_t k = 0; k < (p - 1) / static_cast<std::uint64_t>(d); ++k) r = r * g % p;
      std::uint64_t x = 1;
      int order = 0;
      do {
        x = x * r % p;
        ++order;
      } while (x != 1);
      if (order == d) {
        out.emplace_back(p, r);
        break;
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
  CHECK(root_of_unity_order(3) == 6);
  CHECK(root_of_unity_order(8) == 8);
}

TEST_CASE("ring operations commute with every embedding into F_p") {
  std::mt19937_64 rng(5);
  for (int d : {3, 4, 5, 7, 8, 9, 12, 15}) {
    const auto emb = embeddings(d);
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_element(rng, d), y = random_element(rng, d);
      for (auto [p, r] : emb) {
        const auto ex = eval_mod_p(x, r, p), ey = eval_mod_p(y, r, p);
        CHECK(eval_mod_p(x * y, r, p) == ex * ey % p);
        CHECK(eval_mod_p(x + y, r, p) == (ex + ey) % p);
      }
    }
  }
}

TEST_CASE("roots of unity, conjugation and norms") {
  for (int d : {3, 4, 5, 6, 8, 12}) {
    const int w = root_of_unity_order(d);
    for (int k = 0; k < w; ++k) {
      const auto e = CycInt::eta_power(d, k);
      REQUIRE(as_root_of_unity(e));
      CHECK(*as_root_of_unity(e) == k);
      CHECK(e * complex_conjugate(e) == CycInt::from_int(d, 1));
      CHECK(abs(norm_to_int(e)) == 1);
    }
    CHECK_FALSE(as_root_of_unity(CycInt::from_int(d, 2)));
  }
  // 1 - zeta_5 has norm 5; 2 + i has norm 5.
  CHECK(norm_to_int(CycInt::from_int(5, 1) - CycInt::zeta_power(5, 1)) == 5);
  CHECK(norm_to_int(CycInt::from_coeffs(4, {2, 1})) == 5);
}

TEST_CASE("galois action is a ring automorphism") {
  std::mt19937_64 rng(9);
  for (int d : {5, 8, 12}) {
    for (int t = 1; t < d; ++t) {
      if (std::gcd(t, d) != 1) continue;
      const auto x = random_element(rng, d), y = random_element(rng, d);
      CHECK(galois_apply(t, x * y) == galois_apply(t, x) * galois_apply(t, y));
      CHECK(galois_apply(t, CycInt::zeta_power(d, 1)) == CycInt::zeta_power(d, t));
    }
    CHECK(galois_apply(d - 1, CycInt::zeta_power(d, 1)) == complex_conjugate(CycInt::zeta_power(d, 1)));
  }
}

TEST_CASE("exact division") {
  const auto x = CycInt::from_coeffs(5, {6, -9, 3, 0});
  CHECK(divisible_by(x, 3));
  CHECK(divide_exact(x, 3) == CycInt::from_coeffs(5, {2, -3, 1, 0}));
  CHECK_THROWS_AS(divide_exact(x, 2), NotDivisible);
  CHECK(CycInt::from_exponent_counts(3, {1, 1, 1}).is_zero());
  CHECK(CycInt::zeta_power(4, 2).as_integer() == Int(-1));
}
