#include "diagbr/quotient_lattice.hpp"

#include <algorithm>
#include <utility>

#include "diagbr/errors.hpp"

namespace diagbr {

namespace {

// col a -= q * col b
void axpy(IntVector& a, const IntVector& b, const Int& q) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) mpz_submul(a[i].get_mpz_t(), q.get_mpz_t(), b[i].get_mpz_t());
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
}

}  // namespace

QuotientLattice::QuotientLattice(const IntMatrix& relations, std::vector<std::size_t> priority)
    : n_(relations.rows()) {
  std::vector<bool> seen(n_, false);
  for (std::size_t k : priority) {
    if (k >= n_ || seen[k]) throw InvalidInput("bad priority list for quotient lattice");
    seen[k] = true;
  }
  for (std::size_t k = 0; k < n_; ++k)
    if (!seen[k]) priority.push_back(k);

  std::vector<IntVector> active;
  for (std::size_t j = 0; j < relations.cols(); ++j) {
    IntVector c = relations.column(j);
    if (!is_zero(c)) active.push_back(std::move(c));
  }

  std::vector<bool> is_pivot(n_, false);
  Int q;
  for (std::size_t row : priority) {
    // Euclid on the entries at `row` among the remaining columns.
    for (;;) {
      std::size_t best = active.size();
      std::size_t nonzero = 0;
      for (std::size_t j = 0; j < active.size(); ++j) {
        if (sgn(active[j][row]) == 0) continue;
        ++nonzero;
        if (best == active.size() || mpz_cmpabs(active[j][row].get_mpz_t(), active[best][row].get_mpz_t()) < 0)
          best = j;
      }
      if (nonzero <= 1) {
        if (nonzero == 1) {
          IntVector piv = std::move(active[best]);
          active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
          if (sgn(piv[row]) < 0)
            for (auto& x : piv) x = -x;
          if (piv[row] != 1) unit_pivots_ = false;
          pivot_rows_.push_back(row);
          pivot_cols_.push_back(std::move(piv));
          is_pivot[row] = true;
        }
        break;
      }
      for (std::size_t j = 0; j < active.size(); ++j) {
        if (j == best || sgn(active[j][row]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), active[j][row].get_mpz_t(), active[best][row].get_mpz_t());
        axpy(active[j], active[best], q);
      }
      active.erase(std::remove_if(active.begin(), active.end(), is_zero), active.end());
    }
  }

  basis_position_.assign(n_, -1);
  for (std::size_t k = 0; k < n_; ++k)
    if (!is_pivot[k]) {
      basis_position_[k] = static_cast<long>(basis_.size());
      basis_.push_back(k);
    }
}

IntVector QuotientLattice::reduce(const IntVector& v) const {
  if (!unit_pivots_) throw InvalidInput("quotient presentation has non-unit pivots");
  if (v.size() != n_) throw InvalidInput("vector length does not match ambient rank");
  IntVector w(v);
  for (std::size_t p = 0; p < pivot_rows_.size(); ++p) {
    const std::size_t row = pivot_rows_[p];
    if (sgn(w[row]) == 0) continue;
    Int c = w[row];
    axpy(w, pivot_cols_[p], c);
  }
  IntVector out(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) out[k] = w[basis_[k]];
  return out;
}

IntVector QuotientLattice::reduce_generator(std::size_t k) const {
  IntVector e(n_);
  e.at(k) = 1;
  return reduce(e);
}

IntMatrix QuotientLattice::projection() const {
  IntMatrix p(rank(), n_);
  for (std::size_t k = 0; k < n_; ++k) {
    IntVector c = reduce_generator(k);
    for (std::size_t i = 0; i < c.size(); ++i) p(i, k) = c[i];
  }
  return p;
}

}  // namespace diagbr
