#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagbr/cyclotomic.hpp"
#include "diagbr/fermat_characters.hpp"
#include "diagbr/parallel.hpp"

namespace diagbr {

// p = 1 mod w; r = g^{(p-1)/d} is the image of zeta_d, which fixes the prime above p.
struct SplitPrimeDatum {
  int d = 0;
  int w = 0;
  std::uint64_t p = 0;
  std::uint64_t g = 0;
  std::uint64_t r = 0;
  std::uint64_t r_w = 0;
};

std::vector<SplitPrimeDatum> find_split_primes(int d, std::uint64_t bound);
// Datum for a chosen primitive root g (validated).
SplitPrimeDatum split_prime_datum(int d, std::uint64_t p, std::uint64_t g);
std::uint64_t smallest_primitive_root(std::uint64_t p);

// Discrete logs base g and the (log u, log(1-u)) mod d histogram, shared read-only.
class PrimeContext {
 public:
  explicit PrimeContext(const SplitPrimeDatum& prime);

  const SplitPrimeDatum& prime() const noexcept { return prime_; }
  std::uint64_t dlog(std::uint64_t x) const;
  int log_mod_d(std::uint64_t x) const { return psi_[x]; }
  int log_minus_one() const noexcept { return log_minus_one_; }
  long histogram(int alpha, int beta) const { return hist_[static_cast<std::size_t>(alpha * prime_.d + beta)]; }

 private:
  SplitPrimeDatum prime_;
  std::vector<std::uint32_t> log_;
  std::vector<int> psi_;
  std::vector<long> hist_;
  int log_minus_one_ = 0;
};

// j with x^{(p-1)/m} = (g^{(p-1)/m})^j, for m dividing p - 1.
int residue_symbol(std::uint64_t x, const PrimeContext& ctx, int m);

// Sum over x1 + x2 + x3 = -1 with all x_i nonzero of psi(x1)^a1 psi(x2)^a2 psi(x3)^a3.
CycInt jacobi_sum_reference(const CharQuadruple& chi, const PrimeContext& ctx);
// Same sum through two-variable Jacobi sums; O(d^2) per character once ctx exists.
CycInt jacobi_sum(const CharQuadruple& chi, const PrimeContext& ctx);
// Sum over x1 + x2 + x3 = 0; vanishes whenever a1 + a2 + a3 is nonzero mod d.
CycInt jacobi_sum_homogeneous(const CharQuadruple& chi, const PrimeContext& ctx);

enum class JacobiMethod { reduction, reference };

struct HValue {
  CharQuadruple chi;
  SplitPrimeDatum prime;
  CycInt j;
  CycInt twisted;              // psi(-1)^{a0} J
  bool divisible = false;      // p | twisted
  std::optional<CycInt> h;     // twisted / p
  std::optional<int> h_root;   // k with h = eta^k

  bool is_one() const { return h_root && *h_root == 0; }
};

HValue h_value(const CharQuadruple& chi, const PrimeContext& ctx, JacobiMethod method = JacobiMethod::reduction);

// Row-major over (prime, character).
struct HTable {
  int d = 0;
  std::vector<CharQuadruple> chars;
  std::vector<SplitPrimeDatum> primes;
  std::vector<HValue> values;

  const HValue& at(std::size_t prime_index, std::size_t char_index) const {
    return values[prime_index * chars.size() + char_index];
  }
};

HTable h_table(int d, const std::vector<CharQuadruple>& chars, const std::vector<SplitPrimeDatum>& primes,
               Exec exec = Exec::parallel, JacobiMethod method = JacobiMethod::reduction);

// Primes p <= bound (split) where the reduction and the triple sum differ.
std::vector<std::uint64_t> validate_jacobi_reduction(int d, std::uint64_t bound);

struct DeltaGenerators {
  int d = 0;
  std::vector<CycInt> elements;
  std::vector<std::string> labels;
};

DeltaGenerators default_delta_generators(int d);
// Exponent lists: each entry {e_0, ..., e_{d-1}} is sum_k e_k zeta^k.
DeltaGenerators delta_generators_from(int d, const std::vector<std::vector<long>>& exponents);

struct KummerVerdict {
  int d = 0;
  std::size_t characters = 0;
  std::size_t primes_tested = 0;
  std::vector<std::uint64_t> primes_skipped;
  std::size_t signature_classes = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

// Equal w-th power residue signatures of Delta imply equal h; trivial signature implies h = 1.
KummerVerdict kummer_consistency_test(const HTable& table, const DeltaGenerators& gens);

struct GeneratorSearch {
  std::optional<CycInt> pi;  // |N(pi)| = p and pi maps to 0 under zeta -> r
  long bound_used = 0;
};

GeneratorSearch find_prime_generator(const SplitPrimeDatum& prime, long max_box = 5'000'000);

struct CongruenceVerdict {
  int d = 0;
  Int modulus;  // c = 2 w^2
  std::vector<std::uint64_t> primes_with_generator;
  std::vector<std::uint64_t> primes_skipped;
  std::size_t pairs_compared = 0;
  std::size_t congruent_pairs = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Pairs whose generators agree mod c up to a root of unity must have equal h.
CongruenceVerdict grossencharacter_congruence_test(const HTable& table);

}  // namespace diagbr
