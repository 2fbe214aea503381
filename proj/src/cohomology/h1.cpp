#include <array>
#include <cstdint>
#include <optional>

#include "diagbr/cohomology.hpp"
#include "diagbr/errors.hpp"
#include "diagbr/smith.hpp"

namespace diagbr {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<u64, 3> kPrimes = {2305843009213693951ULL, 4294967291ULL, 998244353ULL};

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

// Row echelon mod p with normalized pivots; each stored row is reduced
// against all earlier ones, so one pass in insertion order reduces a vector.
class ModpEchelon {
 public:
  ModpEchelon(std::size_t n, u64 p) : n_(n), p_(p) {}

  std::size_t rank() const noexcept { return rows_.size(); }

  bool insert(std::vector<u64>& v) {
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      u64 c = v[pivots_[b]];
      if (c == 0) continue;
      const auto& row = rows_[b];
      for (std::size_t j = 0; j < n_; ++j)
        if (row[j]) v[j] = (v[j] + p_ - mulmod(c, row[j], p_)) % p_;
    }
    std::size_t piv = 0;
    while (piv < n_ && v[piv] == 0) ++piv;
    if (piv == n_) return false;
    u64 inv = powmod(v[piv], p_ - 2, p_);
    for (auto& x : v) x = mulmod(x, inv, p_);
    rows_.push_back(v);
    pivots_.push_back(piv);
    return true;
  }

 private:
  std::size_t n_;
  u64 p_;
  std::vector<std::vector<u64>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class T>
struct Arith;

template <>
struct Arith<std::int64_t> {
  static void add(std::int64_t& a, std::int64_t b) { a = checked_add(a, b); }
  static std::int64_t sub(std::int64_t a, std::int64_t b) { return checked_sub(a, b); }
  static bool zero(std::int64_t a) { return a == 0; }
  static u64 mod(std::int64_t a, u64 p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  static Int to_int(std::int64_t a) { return Int(static_cast<long>(a)); }
};

template <>
struct Arith<Int> {
  static void add(Int& a, std::int64_t b) { a += static_cast<long>(b); }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static bool zero(const Int& a) { return sgn(a) == 0; }
  static u64 mod(const Int& a, u64 p) {
    Int r;
    Int pp;
    mpz_import(pp.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t());
    u64 out = 0;
    mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
    return out;
  }
  static Int to_int(const Int& a) { return a; }
};

// Walks the Cayley graph, expressing f(g) in the unknowns f(s_k), and hands
// every closing edge to on_row as r rows of length n = m r. on_row returns
// false to stop.
template <class T, class OnRow>
void propagate(const LatticeModule& m, const CayleyTree& tree, OnRow&& on_row) {
  const FiniteGroup& g = m.group();
  const std::size_t r = m.rank();
  const std::size_t ng = g.num_generators();
  const std::size_t n = ng * r;
  const std::size_t blk = r * n;
  std::vector<T> expr(g.order() * blk);
  std::vector<T> cand(blk);
  std::vector<T> row(n);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Mat64& rho = m.action(x);
    for (std::size_t k = 0; k < ng; ++k) {
      const std::size_t y = g.right_gen(x, k);
      for (std::size_t t = 0; t < blk; ++t) cand[t] = expr[x * blk + t];
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) Arith<T>::add(cand[i * n + k * r + j], rho(i, j));
      if (tree.parent_element[y] == x && tree.parent_generator[y] == k && y != 0) {
        for (std::size_t t = 0; t < blk; ++t) expr[y * blk + t] = cand[t];
        continue;
      }
      for (std::size_t i = 0; i < r; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
          row[j] = Arith<T>::sub(cand[i * n + j], expr[y * blk + i * n + j]);
          nonzero = nonzero || !Arith<T>::zero(row[j]);
        }
        if (nonzero && !on_row(row)) return;
      }
    }
  }
}

// Exact check row * K == 0, int64 with 128-bit accumulation when K fits.
class KernelCheck {
 public:
  explicit KernelCheck(const IntMatrix& k) : k_(k) {
    try {
      small_ = Mat64::from(k);
      use_small_ = true;
    } catch (const Overflow&) {
      use_small_ = false;
    }
  }

  template <class T>
  bool annihilates(const std::vector<T>& row) const {
    const std::size_t n = k_.rows();
    for (std::size_t c = 0; c < k_.cols(); ++c) {
      if constexpr (std::is_same_v<T, std::int64_t>) {
        if (use_small_) {
          __int128 acc = 0;
          for (std::size_t j = 0; j < n; ++j) acc += static_cast<__int128>(row[j]) * small_(j, c);
          if (acc != 0) return false;
          continue;
        }
      }
      Int acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += Arith<T>::to_int(row[j]) * k_(j, c);
      if (sgn(acc) != 0) return false;
    }
    return true;
  }

 private:
  const IntMatrix& k_;
  Mat64 small_;
  bool use_small_ = false;
};

IntMatrix coboundary_matrix(const LatticeModule& m) {
  const std::size_t r = m.rank();
  const std::size_t ng = m.group().num_generators();
  IntMatrix b(ng * r, r);
  for (std::size_t k = 0; k < ng; ++k) {
    const IntMatrix& a = m.generator_action(k);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) b(k * r + i, j) = a(i, j) - (i == j ? 1 : 0);
  }
  return b;
}

template <class T>
std::optional<IntMatrix> cocycle_lattice(const LatticeModule& m, const CayleyTree& tree, std::size_t target,
                                         bool exhaustive, u64 prime, H1Result& res) {
  const std::size_t n = m.group().num_generators() * m.rank();
  ModpEchelon ech(n, prime);
  std::vector<IntVector> selected;
  std::vector<u64> reduced(n);
  res.rows_scanned = 0;
  res.stopped_early = false;
  propagate<T>(m, tree, [&](const std::vector<T>& row) {
    ++res.rows_scanned;
    for (std::size_t j = 0; j < n; ++j) reduced[j] = Arith<T>::mod(row[j], prime);
    if (ech.insert(reduced)) {
      IntVector exact(n);
      for (std::size_t j = 0; j < n; ++j) exact[j] = Arith<T>::to_int(row[j]);
      selected.push_back(std::move(exact));
      if (!exhaustive && ech.rank() == target) {
        res.stopped_early = true;
        return false;
      }
    }
    return true;
  });
  if (ech.rank() > target) throw InternalError("cocycle equations exceed the coboundary bound");
  res.rows_selected = selected.size();

  IntMatrix e(selected.size(), n);
  for (std::size_t i = 0; i < selected.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) = selected[i][j];
  IntMatrix k = kernel_basis(e);
  if (res.stopped_early) return k;

  // Rank bound not certified by the sandwich argument: check every equation.
  KernelCheck check(k);
  bool ok = true;
  propagate<T>(m, tree, [&](const std::vector<T>& row) {
    if (!check.annihilates(row)) ok = false;
    return ok;
  });
  if (!ok) return std::nullopt;
  return k;
}

}  // namespace

H1Result h1_detailed(const LatticeModule& m, const H1Options& opt) {
  const FiniteGroup& g = m.group();
  if (g.order() > opt.max_order) throw BudgetExceeded("group order exceeds the cohomology budget");
  if (m.rank() > opt.max_rank) throw BudgetExceeded("module rank exceeds the cohomology budget");
  H1Result res;
  const std::size_t r = m.rank();
  const std::size_t ng = g.num_generators();
  const std::size_t n = ng * r;
  res.unknowns = n;
  if (n == 0) return res;
  if (!m.has_element_cache()) throw InvalidInput("Cayley-graph cohomology needs the element cache");
  const std::size_t bytes = g.order() * r * n * sizeof(std::int64_t);
  if (bytes > opt.max_bytes) throw BudgetExceeded("cocycle expressions exceed the memory budget");

  IntMatrix b = coboundary_matrix(m);
  const std::size_t rank_b = rank(b);
  const std::size_t target = n - rank_b;
  CayleyTree tree = cayley_tree(g);

  for (u64 prime : kPrimes) {
    std::optional<IntMatrix> k;
    try {
      k = cocycle_lattice<std::int64_t>(m, tree, target, opt.exhaustive, prime, res);
    } catch (const Overflow&) {
      res.used_mpz = true;
      k = cocycle_lattice<Int>(m, tree, target, opt.exhaustive, prime, res);
    }
    if (!k) continue;
    res.cocycle_rank = k->cols();
    if (k->cols() != rank_b) throw InternalError("cocycle lattice rank differs from coboundary rank");
    res.group = subquotient(*k, b);
    if (!res.group.is_finite()) throw InternalError("H^1 of a finite group came out infinite");
    return res;
  }
  throw InternalError("cocycle equations could not be certified");
}

FinAbGroup h1(const LatticeModule& m, const H1Options& opt) { return h1_detailed(m, opt).group; }

FinAbGroup h1_coboundary_torsion(const LatticeModule& m) {
  if (m.rank() == 0 || m.group().num_generators() == 0) return FinAbGroup::trivial();
  FinAbGroup q = cokernel_invariants(coboundary_matrix(m));
  return FinAbGroup::from_divisor_chain(q.invariant_factors(), 0);
}

namespace {

IntMatrix power_sum(const IntMatrix& sigma, std::size_t order, IntMatrix* last_power) {
  const std::size_t r = sigma.rows();
  IntMatrix p = IntMatrix::identity(r);
  IntMatrix sum(r, r);
  for (std::size_t i = 0; i < order; ++i) {
    sum = sum + p;
    p = p * sigma;
  }
  if (last_power) *last_power = p;
  return sum;
}

}  // namespace

FinAbGroup h1_cyclic(const IntMatrix& sigma, std::size_t order) {
  if (sigma.rows() != sigma.cols()) throw InvalidInput("sigma must be square");
  IntMatrix top;
  IntMatrix norm = power_sum(sigma, order, &top);
  if (!top.is_identity()) throw InvalidInput("sigma does not have the stated order");
  IntMatrix one_minus = IntMatrix::identity(sigma.rows()) - sigma;
  return subquotient(kernel_basis(norm), one_minus);
}

FinAbGroup tate_h0_cyclic(const IntMatrix& sigma, std::size_t order) {
  if (sigma.rows() != sigma.cols()) throw InvalidInput("sigma must be square");
  IntMatrix top;
  IntMatrix norm = power_sum(sigma, order, &top);
  if (!top.is_identity()) throw InvalidInput("sigma does not have the stated order");
  IntMatrix one_minus = IntMatrix::identity(sigma.rows()) - sigma;
  return subquotient(kernel_basis(one_minus), norm);
}

}  // namespace diagbr
