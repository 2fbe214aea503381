#include "diagbr/smith.hpp"

#include <utility>

#include "diagbr/errors.hpp"

namespace diagbr {

namespace {

int cmp_abs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Elimination state. U and V are updated only when tracked.
struct SmithWork {
  IntMatrix a;
  IntMatrix u;
  IntMatrix v;
  bool track_u;
  bool track_v;

  SmithWork(const IntMatrix& m, bool tu, bool tv) : a(m), track_u(tu), track_v(tv) {
    if (tu) u = IntMatrix::identity(m.rows());
    if (tv) v = IntMatrix::identity(m.cols());
  }

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (track_u) u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (track_v) v.swap_cols(i, j);
  }
  void row_sub(std::size_t dst, std::size_t src, const Int& q) {
    a.row_sub(dst, src, q);
    if (track_u) u.row_sub(dst, src, q);
  }
  void col_sub(std::size_t dst, std::size_t src, const Int& q) {
    a.col_sub(dst, src, q);
    if (track_v) v.col_sub(dst, src, q);
  }

  // Smallest nonzero |a(i,j)| with i,j >= t; ties to lowest (i,j).
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        const Int& x = a(i, j);
        if (sgn(x) == 0) continue;
        if (!found || cmp_abs(x, a(pi, pj)) < 0) {
          pi = i;
          pj = j;
          found = true;
          if (x == 1 || x == -1) return true;
        }
      }
    return found;
  }

  // Clears row t and column t beyond the pivot, then enforces that the
  // pivot divides the remaining block.
  void clear_cross(std::size_t t) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Int q;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_sub(i, t, q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_sub(j, t, q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) {
        std::size_t best_i = t, best_j = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(a(i, t)) != 0 && cmp_abs(a(i, t), a(best_i, best_j)) < 0) {
            best_i = i;
            best_j = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(a(t, j)) != 0 && cmp_abs(a(t, j), a(best_i, best_j)) < 0) {
            best_i = t;
            best_j = j;
          }
        swap_rows(t, best_i);
        swap_cols(t, best_j);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(a(i, j)) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            row_sub(t, i, Int(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (sgn(a(t, t)) < 0) {
      a.negate_row(t);
      if (track_u) u.negate_row(t);
    }
  }

  std::size_t run() {
    std::size_t t = 0;
    const std::size_t lim = std::min(a.rows(), a.cols());
    for (; t < lim; ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      clear_cross(t);
    }
    return t;
  }
};

}  // namespace

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithWork w(a, true, true);
  SmithForm f;
  f.rank = w.run();
  f.U = std::move(w.u);
  f.D = std::move(w.a);
  f.V = std::move(w.v);
  return f;
}

std::vector<Int> smith_invariants(const IntMatrix& a) {
  SmithWork w(a, false, false);
  std::size_t r = w.run();
  std::vector<Int> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(w.a(i, i));
  return out;
}

std::size_t rank(const IntMatrix& a) { return smith_invariants(a).size(); }

FinAbGroup cokernel_invariants(const IntMatrix& a) {
  std::vector<Int> diag = smith_invariants(a);
  std::vector<Int> chain;
  for (auto& x : diag)
    if (x != 1) chain.push_back(std::move(x));
  return FinAbGroup::from_divisor_chain(std::move(chain), a.rows() - diag.size());
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithWork w(a, false, true);
  std::size_t r = w.run();
  const std::size_t n = a.cols();
  return w.v.block(0, r, n, n - r);
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m(a);
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  Int d = determinant(a);
  return d == 1 || d == -1;
}

std::optional<IntMatrix> lattice_coordinates(const IntMatrix& basis, const IntMatrix& targets) {
  if (basis.rows() != targets.rows()) throw InvalidInput("lattice_coordinates row mismatch");
  SmithForm f = smith_normal_form(basis);
  if (f.rank != basis.cols()) throw InvalidInput("lattice basis columns are dependent");
  IntMatrix ut = f.U * targets;
  const std::size_t k = f.rank;
  for (std::size_t i = k; i < ut.rows(); ++i)
    for (std::size_t j = 0; j < ut.cols(); ++j)
      if (sgn(ut(i, j)) != 0) return std::nullopt;
  IntMatrix z(k, targets.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < ut.cols(); ++j) {
      if (!mpz_divisible_p(ut(i, j).get_mpz_t(), f.D(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(z(i, j).get_mpz_t(), ut(i, j).get_mpz_t(), f.D(i, i).get_mpz_t());
    }
  return f.V * z;
}

FinAbGroup subquotient(const IntMatrix& basis, const IntMatrix& gens) {
  SmithForm f = smith_normal_form(basis);
  if (f.rank != basis.cols()) throw InvalidInput("subquotient basis columns are dependent");
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.D(i, i) != 1) throw InvalidInput("subquotient basis is not saturated");
  auto y = lattice_coordinates(basis, gens);
  if (!y) throw InvalidInput("subquotient generators leave the lattice");
  return cokernel_invariants(*y);
}

IntMatrix column_span_basis(const IntMatrix& p) {
  std::vector<IntVector> active;
  for (std::size_t j = 0; j < p.cols(); ++j) active.push_back(p.column(j));
  std::vector<IntVector> out;
  Int q;
  for (std::size_t row = 0; row < p.rows(); ++row) {
    for (;;) {
      std::size_t best = active.size();
      std::size_t nonzero = 0;
      for (std::size_t j = 0; j < active.size(); ++j) {
        if (sgn(active[j][row]) == 0) continue;
        ++nonzero;
        if (best == active.size() || cmp_abs(active[j][row], active[best][row]) < 0) best = j;
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        out.push_back(std::move(active[best]));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
      for (std::size_t j = 0; j < active.size(); ++j) {
        if (j == best || sgn(active[j][row]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), active[j][row].get_mpz_t(), active[best][row].get_mpz_t());
        for (std::size_t i = 0; i < p.rows(); ++i) active[j][i] -= q * active[best][i];
      }
    }
  }
  return IntMatrix::from_columns(out, p.rows());
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  if (!is_unimodular(u)) throw InvalidInput("matrix is not unimodular");
  auto inv = lattice_coordinates(u, IntMatrix::identity(u.rows()));
  if (!inv) throw InternalError("unimodular inverse failed");
  return *inv;
}

TorsionKernel kernel_mod(const IntMatrix& m, const std::vector<Int>& orders, const Int& modulus) {
  const std::size_t n = orders.size();
  const std::size_t k = m.rows();
  if (m.cols() != n) throw InvalidInput("kernel_mod shape mismatch");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < k; ++i)
      if (!mpz_divisible_p(Int(orders[j] * m(i, j)).get_mpz_t(), modulus.get_mpz_t()))
        throw InvalidInput("kernel_mod map is not well defined on the source orders");
  TorsionKernel out;
  if (n == 0) return out;
  IntMatrix a(k, n + k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = modulus;
  }
  IntMatrix kk = kernel_basis(a);
  IntMatrix lat = column_span_basis(kk.block(0, 0, n, kk.cols()));
  if (lat.cols() != n) throw InternalError("kernel lattice is not of full rank");
  IntMatrix diag(n, n);
  for (std::size_t j = 0; j < n; ++j) diag(j, j) = orders[j];
  auto y = lattice_coordinates(lat, diag);
  if (!y) throw InternalError("source relations leave the kernel lattice");
  SmithForm f = smith_normal_form(*y);
  IntMatrix gens = lat * inverse_unimodular(f.U);
  std::vector<Int> chain;
  for (std::size_t i = 0; i < n; ++i) {
    const Int s = i < f.rank ? f.D(i, i) : Int(0);
    if (s == 1) continue;
    if (sgn(s) == 0) throw InternalError("kernel of a finite group map came out infinite");
    chain.push_back(s);
    IntVector g = gens.column(i);
    for (std::size_t j = 0; j < n; ++j) mpz_fdiv_r(g[j].get_mpz_t(), g[j].get_mpz_t(), orders[j].get_mpz_t());
    out.generators.push_back(std::move(g));
  }
  out.group = FinAbGroup::from_divisor_chain(chain, 0);
  return out;
}

}  // namespace diagbr
