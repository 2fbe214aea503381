#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diagbr/int_matrix.hpp"

namespace diagbr {

// Coefficients of the d-th cyclotomic polynomial, constant term first.
std::vector<Int> cyclotomic_polynomial(int d);

int euler_phi(int d);

// Order w of the torsion of Q(zeta_d): d for even d, 2d for odd d.
int root_of_unity_order(int d);

// Z[zeta_d] in the power basis 1, zeta, ..., zeta^{phi(d)-1}.
class CyclotomicRing {
 public:
  static std::shared_ptr<const CyclotomicRing> get(int d);

  int d() const noexcept { return d_; }
  int degree() const noexcept { return phi_; }
  int w() const noexcept { return w_; }
  const std::vector<Int>& modulus() const noexcept { return poly_; }

  // Reduces a coefficient vector of any length modulo Phi_d; result has
  // length degree().
  void reduce(std::vector<Int>& v) const;

  explicit CyclotomicRing(int d);

 private:
  int d_;
  int phi_;
  int w_;
  std::vector<Int> poly_;
};

class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(int d);  // zero of Z[zeta_d]

  static CycInt from_int(int d, const Int& n);
  static CycInt zeta_power(int d, long e);
  // eta^k with eta = zeta (d even) or -zeta (d odd), a generator of the roots of unity.
  static CycInt eta_power(int d, long k);
  static CycInt from_coeffs(int d, std::vector<Int> coeffs);
  // sum_e counts[e] zeta^e over e in Z/d.
  static CycInt from_exponent_counts(int d, const std::vector<long>& counts);

  int d() const noexcept { return d_; }
  const std::vector<Int>& coeffs() const noexcept { return c_; }
  bool is_zero() const;
  std::optional<Int> as_integer() const;

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt operator*(const Int& n) const;
  bool operator==(const CycInt& o) const { return d_ == o.d_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  const CyclotomicRing& ring() const;

  int d_ = 0;
  std::vector<Int> c_;
};

// sigma_t(zeta) = zeta^t for t a unit mod d.
CycInt galois_apply(int t, const CycInt& x);
CycInt complex_conjugate(const CycInt& x);
Int norm_to_int(const CycInt& x);
// x / n; throws NotDivisible unless n divides every coefficient.
CycInt divide_exact(const CycInt& x, const Int& n);
bool divisible_by(const CycInt& x, const Int& n);
// k with x = eta^k, 0 <= k < w.
std::optional<int> as_root_of_unity(const CycInt& x);

// Image of x under zeta -> r in F_p.
std::uint64_t eval_mod_p(const CycInt& x, std::uint64_t r, std::uint64_t p);

}  // namespace diagbr
