#include <algorithm>
#include <memory>
#include <set>

#include "diagbr/errors.hpp"
#include "diagbr/smith.hpp"
#include "diagbr/surface_lattices.hpp"

namespace diagbr {

namespace {

void check_degree(int d) {
  if (d < 2 || d > 255) throw InvalidInput("degree must lie in [2, 255]");
}

// Lines through a vertex row or column are eliminated first, so the
// surviving generators are L_ij with i, j >= 1 (and h).
std::vector<std::size_t> border_first(int d) {
  std::vector<std::size_t> pri;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i == 0 || j == 0) pri.push_back(line_index(d, i, j));
  return pri;
}

void check_roots_perm(int d, std::span<const std::uint16_t> p) {
  if (p.size() != static_cast<std::size_t>(2 * d)) throw InvalidInput("root permutation must act on 2d points");
  for (int i = 0; i < d; ++i) {
    if (p[static_cast<std::size_t>(i)] >= d) throw InvalidInput("permutation mixes f-roots and g-roots");
    if (p[static_cast<std::size_t>(d + i)] < d) throw InvalidInput("permutation mixes f-roots and g-roots");
  }
}

IntMatrix permuted_action(const IntMatrix& projection, const std::vector<std::size_t>& basis,
                          const std::vector<std::size_t>& image_of_ambient) {
  IntMatrix a(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    std::size_t img = image_of_ambient[basis[c]];
    for (std::size_t r = 0; r < basis.size(); ++r) a(r, c) = projection(r, img);
  }
  return a;
}

std::vector<std::size_t> line_images(int d, std::span<const std::uint16_t> p, bool with_h) {
  std::vector<std::size_t> img(static_cast<std::size_t>(d * d) + (with_h ? 1 : 0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      img[line_index(d, i, j)] = line_index(d, p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(d + j)] - d);
  if (with_h) img.back() = static_cast<std::size_t>(d * d);
  return img;
}

}  // namespace

long line_intersection(int d, int i, int j, int r, int s) {
  if (i == r && j == s) return -(d - 2);
  if (i != r && j != s) return 0;
  return 1;
}

LambdaLattice::LambdaLattice(int d) : d_(d) {
  check_degree(d);
  const std::size_t n = static_cast<std::size_t>(d * d) + 1;
  const std::size_t hidx = n - 1;
  relations_ = IntMatrix(n, static_cast<std::size_t>(2 * d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      relations_(line_index(d, i, j), static_cast<std::size_t>(i)) = 1;
      relations_(line_index(d, i, j), static_cast<std::size_t>(d + j)) = 1;
    }
    relations_(hidx, static_cast<std::size_t>(i)) = -1;
    relations_(hidx, static_cast<std::size_t>(d + i)) = -1;
  }
  quotient_ = QuotientLattice(relations_, border_first(d));
  if (!quotient_.has_unit_pivots()) throw InternalError("line lattice presentation has non-unit pivots");
  projection_ = quotient_.projection();

  const auto& basis = quotient_.basis_generators();
  gram_ = IntMatrix(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t x = basis[a], y = basis[b];
      long v;
      if (x == hidx && y == hidx) {
        v = d;
      } else if (x == hidx || y == hidx) {
        v = 1;
      } else {
        v = line_intersection(d, static_cast<int>(x) / d, static_cast<int>(x) % d, static_cast<int>(y) / d,
                              static_cast<int>(y) % d);
      }
      gram_(a, b) = v;
    }
}

IntVector LambdaLattice::root_kernel_vector() const {
  IntVector v(static_cast<std::size_t>(2 * d_));
  for (int i = 0; i < d_; ++i) {
    v[static_cast<std::size_t>(i)] = 1;
    v[static_cast<std::size_t>(d_ + i)] = -1;
  }
  return v;
}

IntVector LambdaLattice::line(int i, int j) const {
  return projection_.column(line_index(d_, ((i % d_) + d_) % d_, ((j % d_) + d_) % d_));
}

IntVector LambdaLattice::hyperplane() const { return projection_.column(static_cast<std::size_t>(d_ * d_)); }

IntMatrix LambdaLattice::action_of(std::span<const std::uint16_t> roots_perm) const {
  check_roots_perm(d_, roots_perm);
  return permuted_action(projection_, quotient_.basis_generators(), line_images(d_, roots_perm, true));
}

LatticeModule LambdaLattice::module(GroupPtr line_group, ActionCache cache, Exec exec) const {
  std::vector<IntMatrix> gens;
  for (auto g : line_group->generators()) gens.push_back(action_of(line_group->perm(g)));
  return LatticeModule(std::move(line_group), std::move(gens), cache, exec);
}

TensorLattice::TensorLattice(int d) : d_(d) {
  check_degree(d);
  const std::size_t n = static_cast<std::size_t>(d * d);
  IntMatrix rel(n, static_cast<std::size_t>(2 * d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      rel(line_index(d, i, j), static_cast<std::size_t>(i)) = 1;
      rel(line_index(d, i, j), static_cast<std::size_t>(d + j)) = 1;
    }
  quotient_ = QuotientLattice(rel, border_first(d));
  if (!quotient_.has_unit_pivots()) throw InternalError("tensor presentation has non-unit pivots");
  projection_ = quotient_.projection();
}

IntMatrix TensorLattice::action_of(std::span<const std::uint16_t> roots_perm) const {
  check_roots_perm(d_, roots_perm);
  return permuted_action(projection_, quotient_.basis_generators(), line_images(d_, roots_perm, false));
}

LatticeModule TensorLattice::module(GroupPtr line_group, ActionCache cache, Exec exec) const {
  std::vector<IntMatrix> gens;
  for (auto g : line_group->generators()) gens.push_back(action_of(line_group->perm(g)));
  return LatticeModule(std::move(line_group), std::move(gens), cache, exec);
}

bool ExactnessAudit::ok() const { return composite_zero && kernel_is_line; }

ExactnessAudit audit_lambda_exactness(int d) {
  LambdaLattice lam(d);
  const IntMatrix& p2 = lam.relation_matrix();
  IntVector p1 = lam.root_kernel_vector();
  ExactnessAudit a;
  IntVector comp = p2 * p1;
  a.composite_zero = std::all_of(comp.begin(), comp.end(), [](const Int& x) { return sgn(x) == 0; });
  IntMatrix k = kernel_basis(p2);
  if (k.cols() == 1) {
    IntVector col = k.column(0);
    IntVector neg(col.size());
    for (std::size_t i = 0; i < col.size(); ++i) neg[i] = -col[i];
    a.kernel_is_line = (col == p1 || neg == p1);
  }
  a.cokernel = cokernel_invariants(p2);
  return a;
}

}  // namespace diagbr
