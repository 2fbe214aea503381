#include <algorithm>
#include <memory>
#include <set>

#include "diagbr/errors.hpp"
#include "diagbr/smith.hpp"
#include "diagbr/surface_lattices.hpp"

namespace diagbr {

namespace {

struct Mono {
  int d;
  std::size_t index(int a, int b, int c) const {
    auto m = [this](int x) { return static_cast<std::size_t>(((x % d) + d) % d); };
    const auto dd = static_cast<std::size_t>(d);
    return m(a) * dd * dd + m(b) * dd + m(c);
  }
};

constexpr int kSteps[4][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};

}  // namespace

FermatLatticeP::FermatLatticeP(int d, int max_d) : d_(d) {
  if (d < 2) throw InvalidInput("degree must be at least 2");
  if (d > max_d) throw BudgetExceeded("P lattice degree above the configured cap");
  const Mono mono{d};
  const std::size_t n = static_cast<std::size_t>(d * d * d);
  std::set<std::vector<std::size_t>> seen;
  std::vector<IntVector> cols;
  for (const auto& st : kSteps)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
          std::vector<std::size_t> support;
          for (int k = 0; k < d; ++k) support.push_back(mono.index(a + k * st[0], b + k * st[1], c + k * st[2]));
          std::sort(support.begin(), support.end());
          if (!seen.insert(support).second) continue;
          IntVector col(n);
          for (auto s : support) col[s] = 1;
          cols.push_back(std::move(col));
        }
  relations_ = IntMatrix::from_columns(cols, n);

  // Monomials with some exponent d-1 go first, highest index first.
  std::vector<std::size_t> pri(n);
  for (std::size_t k = 0; k < n; ++k) pri[k] = n - 1 - k;
  quotient_ = QuotientLattice(relations_, pri);
  if (!quotient_.has_unit_pivots()) throw InternalError("P presentation has non-unit pivots");
  projection_ = quotient_.projection();
}

IntMatrix FermatLatticeP::multiplication(int k) const {
  if (k < 0 || k > 2) throw InvalidInput("multiplier index must be 0, 1 or 2");
  const Mono mono{d_};
  const auto& basis = quotient_.basis_generators();
  const std::size_t dd = static_cast<std::size_t>(d_);
  IntMatrix m(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    std::size_t x = basis[col];
    int a = static_cast<int>(x / (dd * dd)), b = static_cast<int>((x / dd) % dd), c = static_cast<int>(x % dd);
    std::size_t img = mono.index(a + kSteps[k][0], b + kSteps[k][1], c + kSteps[k][2]);
    for (std::size_t row = 0; row < basis.size(); ++row) m(row, col) = projection_(row, img);
  }
  return m;
}

FinAbGroup FermatLatticeP::presentation_cokernel() const { return cokernel_invariants(relations_); }

LatticeModule FermatLatticeP::module(ActionCache cache, Exec exec) const {
  const std::size_t d = static_cast<std::size_t>(d_);
  std::vector<Perm> gens;
  for (std::size_t k = 0; k < 3; ++k) {
    Perm p(3 * d);
    for (std::size_t i = 0; i < 3 * d; ++i) p[i] = static_cast<std::uint16_t>(i);
    for (std::size_t i = 0; i < d; ++i) p[k * d + i] = static_cast<std::uint16_t>(k * d + (i + 1) % d);
    gens.push_back(std::move(p));
  }
  auto g = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_permutations(3 * d, gens, kDefaultOrderBound, "(Z/" + std::to_string(d_) + ")^3"));
  return LatticeModule(g, {multiplication(0), multiplication(1), multiplication(2)}, cache, exec);
}

PCheck fermat_p_check(int d) {
  FermatLatticeP p(d);
  PCheck out;
  out.d = d;
  out.rank = p.rank();
  IntMatrix sigma = p.multiplication(1) * p.multiplication(2);
  out.h1_u2u3 = h1_cyclic(sigma, static_cast<std::size_t>(d));
  out.invariant_rank = kernel_basis(sigma - IntMatrix::identity(p.rank())).cols();
  out.a_ok = out.h1_u2u3.is_trivial();
  out.b_ok = out.invariant_rank == static_cast<std::size_t>((d - 1) * (d - 1));
  return out;
}

bool check_aC(int d) { return fermat_p_check(d).a_ok; }
bool check_bC(int d) { return fermat_p_check(d).b_ok; }

CycInt omega_pairing(int d, int l, int n, Exec exec) {
  if (d < 2) throw InvalidInput("degree must be at least 2");
  std::vector<long> hist(static_cast<std::size_t>(d), 0);
  const long dl = d;
  auto md = [dl](long x) { return static_cast<std::size_t>(((x % dl) + dl) % dl); };
  if (exec == Exec::serial) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int r = 0; r < d; ++r)
          for (int s = 0; s < d; ++s)
            hist[md(static_cast<long>(i - r) * l + static_cast<long>(j - s) * n)] +=
                line_intersection(d, i, j, r, s);
  } else {
    long* h = hist.data();
#pragma omp parallel for reduction(+ : h[:d]) schedule(static)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int r = 0; r < d; ++r)
          for (int s = 0; s < d; ++s)
            h[md(static_cast<long>(i - r) * l + static_cast<long>(j - s) * n)] += line_intersection(d, i, j, r, s);
  }
  return CycInt::from_exponent_counts(d, hist);
}

}  // namespace diagbr
