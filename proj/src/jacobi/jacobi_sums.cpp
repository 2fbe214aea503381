#include "diagbr/jacobi_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "diagbr/errors.hpp"

namespace diagbr {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

int md(long x, int d) { return static_cast<int>(((x % d) + d) % d); }

// k with x = y^k for y of order m in F_p; x must be an m-th root of unity.
int root_index(std::uint64_t x, std::uint64_t y, int m, std::uint64_t p) {
  std::uint64_t cur = 1;
  for (int k = 0; k < m; ++k, cur = mulmod(cur, y, p))
    if (cur == x) return k;
  throw InternalError("value is not a power of the chosen root of unity");
}

CycInt psi_power(const PrimeContext& ctx, long k) {
  return CycInt::zeta_power(ctx.prime().d, k * ctx.log_minus_one());
}

// sum over u not in {0, 1} of psi(u)^a psi(1-u)^b.
CycInt jacobi2(const PrimeContext& ctx, long a, long b) {
  const int d = ctx.prime().d;
  std::vector<long> counts(static_cast<std::size_t>(d), 0);
  for (int al = 0; al < d; ++al)
    for (int be = 0; be < d; ++be) {
      const long c = ctx.histogram(al, be);
      if (c) counts[static_cast<std::size_t>(md(a * al + b * be, d))] += c;
    }
  return CycInt::from_exponent_counts(d, counts);
}

CycInt triple_sum(const CharQuadruple& chi, const PrimeContext& ctx, std::uint64_t target) {
  const int d = chi.d;
  const std::uint64_t p = ctx.prime().p;
  std::vector<long> counts(static_cast<std::size_t>(d), 0);
  for (std::uint64_t x1 = 1; x1 < p; ++x1) {
    const long e1 = static_cast<long>(chi.a[1]) * ctx.log_mod_d(x1);
    for (std::uint64_t x2 = 1; x2 < p; ++x2) {
      const std::uint64_t x3 = (target + 2 * p - x1 - x2) % p;
      if (x3 == 0) continue;
      const long e = e1 + static_cast<long>(chi.a[2]) * ctx.log_mod_d(x2) +
                     static_cast<long>(chi.a[3]) * ctx.log_mod_d(x3);
      ++counts[static_cast<std::size_t>(e % d)];
    }
  }
  return CycInt::from_exponent_counts(d, counts);
}

void check_char(const CharQuadruple& chi, const PrimeContext& ctx) {
  if (chi.d != ctx.prime().d) throw InvalidInput("character and prime have different degrees");
  for (int x : chi.a)
    if (x < 0 || x >= chi.d) throw InvalidInput("character entries must lie in [0, d-1]");
}

}  // namespace

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("not a prime: " + std::to_string(p));
  if (p == 2) return 1;
  const auto qs = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : qs)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw InternalError("no primitive root found");
}

SplitPrimeDatum split_prime_datum(int d, std::uint64_t p, std::uint64_t g) {
  if (d < 1) throw InvalidInput("degree must be positive");
  const int w = root_of_unity_order(d);
  if (!is_prime(p) || (p - 1) % static_cast<std::uint64_t>(w) != 0)
    throw InvalidInput("p must be a prime with p = 1 mod w");
  g %= p;
  for (auto q : prime_divisors(p - 1))
    if (g == 0 || powmod(g, (p - 1) / q, p) == 1) throw InvalidInput("g is not a primitive root mod p");
  SplitPrimeDatum s;
  s.d = d;
  s.w = w;
  s.p = p;
  s.g = g;
  s.r = powmod(g, (p - 1) / static_cast<std::uint64_t>(d), p);
  s.r_w = powmod(g, (p - 1) / static_cast<std::uint64_t>(w), p);
  return s;
}

std::vector<SplitPrimeDatum> find_split_primes(int d, std::uint64_t bound) {
  if (d < 1) throw InvalidInput("degree must be positive");
  const std::uint64_t w = static_cast<std::uint64_t>(root_of_unity_order(d));
  std::vector<SplitPrimeDatum> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t n = 2; n <= bound; ++n) {
    if (composite[n]) continue;
    for (std::uint64_t m = n * n; m <= bound; m += n) composite[m] = true;
    if ((n - 1) % w == 0 && static_cast<std::uint64_t>(d) % n != 0)
      out.push_back(split_prime_datum(d, n, smallest_primitive_root(n)));
  }
  return out;
}

PrimeContext::PrimeContext(const SplitPrimeDatum& prime) : prime_(prime) {
  const std::uint64_t p = prime.p;
  const int d = prime.d;
  log_.assign(p, 0);
  psi_.assign(p, 0);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k + 1 < p; ++k, x = mulmod(x, prime.g, p)) {
    log_[x] = static_cast<std::uint32_t>(k);
    psi_[x] = static_cast<int>(k % static_cast<std::uint64_t>(d));
  }
  log_minus_one_ = psi_[p - 1];
  hist_.assign(static_cast<std::size_t>(d * d), 0);
  for (std::uint64_t u = 2; u < p; ++u) ++hist_[static_cast<std::size_t>(psi_[u] * d + psi_[p + 1 - u])];
}

std::uint64_t PrimeContext::dlog(std::uint64_t x) const {
  x %= prime_.p;
  if (x == 0) throw InvalidInput("discrete log of zero");
  return log_[x];
}

int residue_symbol(std::uint64_t x, const PrimeContext& ctx, int m) {
  const std::uint64_t p = ctx.prime().p;
  if (m < 1 || (p - 1) % static_cast<std::uint64_t>(m) != 0) throw InvalidInput("m must divide p - 1");
  return static_cast<int>(ctx.dlog(x) % static_cast<std::uint64_t>(m));
}

CycInt jacobi_sum_reference(const CharQuadruple& chi, const PrimeContext& ctx) {
  check_char(chi, ctx);
  return triple_sum(chi, ctx, ctx.prime().p - 1);
}

CycInt jacobi_sum_homogeneous(const CharQuadruple& chi, const PrimeContext& ctx) {
  check_char(chi, ctx);
  return triple_sum(chi, ctx, 0);
}

CycInt jacobi_sum(const CharQuadruple& chi, const PrimeContext& ctx) {
  check_char(chi, ctx);
  const int d = chi.d;
  const long a1 = chi.a[1], a2 = chi.a[2], a3 = chi.a[3];
  // Sum over x1 + x2 + x3 = 1, then x -> -x.
  CycInt plus = jacobi2(ctx, a1, a2) * jacobi2(ctx, a1 + a2, a3);
  if (md(a1 + a2, d) == 0) plus = plus + psi_power(ctx, a2) * Int(static_cast<unsigned long>(ctx.prime().p - 1));
  return psi_power(ctx, a1 + a2 + a3) * plus;
}

HValue h_value(const CharQuadruple& chi, const PrimeContext& ctx, JacobiMethod method) {
  HValue v;
  v.chi = chi;
  v.prime = ctx.prime();
  v.j = method == JacobiMethod::reference ? jacobi_sum_reference(chi, ctx) : jacobi_sum(chi, ctx);
  v.twisted = psi_power(ctx, chi.a[0]) * v.j;
  const Int p(static_cast<unsigned long>(ctx.prime().p));
  v.divisible = divisible_by(v.twisted, p);
  if (v.divisible) {
    v.h = divide_exact(v.twisted, p);
    v.h_root = as_root_of_unity(*v.h);
  }
  return v;
}

HTable h_table(int d, const std::vector<CharQuadruple>& chars, const std::vector<SplitPrimeDatum>& primes, Exec exec,
               JacobiMethod method) {
  HTable t;
  t.d = d;
  t.chars = chars;
  t.primes = primes;
  for (const auto& c : chars)
    if (c.d != d) throw InvalidInput("character degree mismatch");
  for (const auto& q : primes)
    if (q.d != d) throw InvalidInput("prime datum degree mismatch");
  CyclotomicRing::get(d);
  const long np = static_cast<long>(primes.size());
  const long nc = static_cast<long>(chars.size());
  std::vector<std::optional<PrimeContext>> ctx(primes.size());
  t.values.resize(primes.size() * chars.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < np; ++i) ctx[static_cast<std::size_t>(i)].emplace(primes[static_cast<std::size_t>(i)]);
    for (long k = 0; k < np * nc; ++k)
      t.values[static_cast<std::size_t>(k)] =
          h_value(chars[static_cast<std::size_t>(k % nc)], *ctx[static_cast<std::size_t>(k / nc)], method);
    return t;
  }
  std::exception_ptr err;
#pragma omp parallel
  {
#pragma omp for schedule(dynamic)
    for (long i = 0; i < np; ++i) {
      try {
        ctx[static_cast<std::size_t>(i)].emplace(primes[static_cast<std::size_t>(i)]);
      } catch (...) {
#pragma omp critical
        err = std::current_exception();
      }
    }
#pragma omp for schedule(dynamic, 16)
    for (long k = 0; k < np * nc; ++k) {
      if (err) continue;
      try {
        t.values[static_cast<std::size_t>(k)] =
            h_value(chars[static_cast<std::size_t>(k % nc)], *ctx[static_cast<std::size_t>(k / nc)], method);
      } catch (...) {
#pragma omp critical
        err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
  return t;
}

std::vector<std::uint64_t> validate_jacobi_reduction(int d, std::uint64_t bound) {
  std::vector<std::uint64_t> bad;
  std::vector<CharQuadruple> chars;
  for (int a1 = 0; a1 < d; ++a1)
    for (int a2 = 0; a2 < d; ++a2)
      for (int a3 = 0; a3 < d; ++a3) chars.push_back({d, {md(-(a1 + a2 + a3), d), a1, a2, a3}});
  for (const auto& q : find_split_primes(d, bound)) {
    const PrimeContext ctx(q);
    for (const auto& c : chars)
      if (!(jacobi_sum(c, ctx) == jacobi_sum_reference(c, ctx))) {
        bad.push_back(q.p);
        break;
      }
  }
  return bad;
}

DeltaGenerators delta_generators_from(int d, const std::vector<std::vector<long>>& exponents) {
  DeltaGenerators g;
  g.d = d;
  for (const auto& e : exponents) {
    if (e.size() != static_cast<std::size_t>(d)) throw InvalidInput("Delta generator needs d exponent counts");
    g.elements.push_back(CycInt::from_exponent_counts(d, e));
    std::ostringstream os;
    os << "custom:" << g.elements.back().to_string();
    g.labels.push_back(os.str());
  }
  return g;
}

DeltaGenerators default_delta_generators(int d) {
  if (d < 1) throw InvalidInput("degree must be positive");
  DeltaGenerators g;
  g.d = d;
  const int w = root_of_unity_order(d);
  g.elements.push_back(CycInt::eta_power(d, 1));
  g.labels.push_back("eta (order " + std::to_string(w) + ")");
  const CycInt one = CycInt::from_int(d, 1);
  for (int a = 2; a < d; ++a) {
    if (std::gcd(a, d) != 1) continue;
    CycInt s(d);
    for (int k = 0; k < a; ++k) s = s + CycInt::zeta_power(d, k);
    g.elements.push_back(s);
    g.labels.push_back("(1-zeta^" + std::to_string(a) + ")/(1-zeta)");
  }
  for (int q = 2; q <= d; ++q) {
    if (d % q != 0) continue;
    bool prime = true;
    for (int s = 2; s * s <= q; ++s)
      if (q % s == 0) prime = false;
    if (!prime) continue;
    g.elements.push_back(one - CycInt::zeta_power(d, d / q));
    g.labels.push_back("1-zeta^" + std::to_string(d / q));
  }
  for (int b = 1; b < d; ++b) {
    const int n = d / std::gcd(b, d);
    if (prime_divisors(static_cast<std::uint64_t>(n)).size() < 2) continue;
    g.elements.push_back(one - CycInt::zeta_power(d, b));
    g.labels.push_back("1-zeta^" + std::to_string(b));
  }
  return g;
}

KummerVerdict kummer_consistency_test(const HTable& table, const DeltaGenerators& gens) {
  if (gens.d != table.d) throw InvalidInput("Delta generators have the wrong degree");
  KummerVerdict v;
  v.d = table.d;
  v.characters = table.chars.size();
  std::map<std::vector<int>, std::size_t> first;
  for (std::size_t i = 0; i < table.primes.size(); ++i) {
    const auto& q = table.primes[i];
    std::vector<int> sig;
    bool skip = false;
    for (const auto& e : gens.elements) {
      const std::uint64_t x = eval_mod_p(e, q.r, q.p);
      if (x == 0) {
        skip = true;
        break;
      }
      sig.push_back(root_index(powmod(x, (q.p - 1) / static_cast<std::uint64_t>(q.w), q.p), q.r_w, q.w, q.p));
    }
    if (skip) {
      v.primes_skipped.push_back(q.p);
      continue;
    }
    ++v.primes_tested;
    const bool trivial = std::all_of(sig.begin(), sig.end(), [](int s) { return s == 0; });
    auto [it, fresh] = first.emplace(sig, i);
    for (std::size_t c = 0; c < table.chars.size(); ++c) {
      const HValue& h = table.at(i, c);
      std::ostringstream os;
      if (!h.h_root) {
        os << "p=" << q.p << " chi=" << h.chi.to_string() << ": twisted J/p is not a root of unity";
        v.counterexamples.push_back(os.str());
        continue;
      }
      if (trivial && *h.h_root != 0) {
        os << "p=" << q.p << " chi=" << h.chi.to_string() << ": trivial signature but h = eta^" << *h.h_root;
        v.counterexamples.push_back(os.str());
      }
      if (!fresh) {
        const HValue& ref = table.at(it->second, c);
        if (ref.h_root && *ref.h_root != *h.h_root) {
          os << "p=" << q.p << " and p=" << ref.prime.p << " chi=" << h.chi.to_string()
             << ": equal signatures, h differ";
          v.counterexamples.push_back(os.str());
        }
      }
    }
  }
  v.signature_classes = first.size();
  return v;
}

GeneratorSearch find_prime_generator(const SplitPrimeDatum& prime, long max_box) {
  GeneratorSearch res;
  const int d = prime.d;
  const auto ring = CyclotomicRing::get(d);
  const int phi = ring->degree();
  const std::uint64_t p = prime.p;
  const Int target(static_cast<unsigned long>(p));
  if (phi == 1) {
    res.pi = CycInt::from_int(d, target);
    return res;
  }
  const long b0 = static_cast<long>(std::ceil(std::pow(static_cast<double>(p), 1.0 / phi))) + 2;
  std::vector<std::uint64_t> rpow(static_cast<std::size_t>(phi), 1);
  for (int i = 1; i < phi; ++i) rpow[static_cast<std::size_t>(i)] = mulmod(rpow[static_cast<std::size_t>(i - 1)], prime.r, p);
  const long half = static_cast<long>((p - 1) / 2);
  for (long step = b0, attempt = 0; attempt < 3; ++attempt, step *= 2) {
    // Residues in [-half, half] are unique, so c0 is forced by c1..c_{phi-1}.
    const long bound = std::min(step, half);
    const double box = std::pow(2.0 * static_cast<double>(bound) + 1.0, phi - 1);
    if (box > static_cast<double>(max_box)) break;
    res.bound_used = bound;
    std::vector<long> c(static_cast<std::size_t>(phi), -bound);
    c[0] = 0;
    while (true) {
      std::uint64_t s = 0;
      for (int i = 1; i < phi; ++i) {
        const long ci = c[static_cast<std::size_t>(i)];
        const std::uint64_t term = mulmod(static_cast<std::uint64_t>(ci < 0 ? -ci : ci), rpow[static_cast<std::size_t>(i)], p);
        s = ci < 0 ? (s + p - term) % p : (s + term) % p;
      }
      const std::uint64_t neg = (p - s) % p;
      const long c0 = neg > p / 2 ? static_cast<long>(neg) - static_cast<long>(p) : static_cast<long>(neg);
      if (c0 >= -bound && c0 <= bound) {
        std::vector<Int> coeffs(static_cast<std::size_t>(phi));
        coeffs[0] = c0;
        for (int i = 1; i < phi; ++i) coeffs[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
        CycInt x = CycInt::from_coeffs(d, coeffs);
        if (!x.is_zero() && abs(norm_to_int(x)) == target) {
          res.pi = x;
          return res;
        }
      }
      int k = 1;
      while (k < phi && c[static_cast<std::size_t>(k)] == bound) c[static_cast<std::size_t>(k++)] = -bound;
      if (k == phi) break;
      ++c[static_cast<std::size_t>(k)];
    }
    if (bound == half) break;
  }
  return res;
}

CongruenceVerdict grossencharacter_congruence_test(const HTable& table) {
  CongruenceVerdict v;
  v.d = table.d;
  const int w = root_of_unity_order(table.d);
  v.modulus = Int(2 * w * w);
  std::vector<std::pair<std::size_t, CycInt>> gens;
  for (std::size_t i = 0; i < table.primes.size(); ++i) {
    auto s = find_prime_generator(table.primes[i]);
    if (s.pi) {
      gens.emplace_back(i, *s.pi);
      v.primes_with_generator.push_back(table.primes[i].p);
    } else {
      v.primes_skipped.push_back(table.primes[i].p);
    }
  }
  std::vector<CycInt> roots;
  for (int k = 0; k < w; ++k) roots.push_back(CycInt::eta_power(table.d, k));
  for (std::size_t x = 0; x < gens.size(); ++x)
    for (std::size_t y = x + 1; y < gens.size(); ++y) {
      ++v.pairs_compared;
      bool congruent = false;
      for (const auto& e : roots)
        if (divisible_by(gens[x].second - e * gens[y].second, v.modulus)) {
          congruent = true;
          break;
        }
      if (!congruent) continue;
      ++v.congruent_pairs;
      for (std::size_t c = 0; c < table.chars.size(); ++c) {
        const HValue& a = table.at(gens[x].first, c);
        const HValue& b = table.at(gens[y].first, c);
        if (a.h_root != b.h_root) {
          std::ostringstream os;
          os << "p=" << a.prime.p << " and p=" << b.prime.p << " chi=" << a.chi.to_string()
             << ": generators congruent mod " << v.modulus.get_str() << " but h differ";
          v.violations.push_back(os.str());
        }
      }
    }
  return v;
}

}  // namespace diagbr
