#include "diagbr/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "diagbr/errors.hpp"

namespace diagbr {

namespace {

// Exact quotient of a by the monic polynomial b.
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw InternalError("polynomial division degree mismatch");
  std::vector<Int> q(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    Int c = a[k];
    q[k - db] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (sgn(a[i]) != 0) throw InternalError("cyclotomic division left a remainder");
  return q;
}

std::mutex& poly_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Int> cyclotomic_poly_locked(int d, std::map<int, std::vector<Int>>& memo) {
  auto it = memo.find(d);
  if (it != memo.end()) return it->second;
  std::vector<Int> p(static_cast<std::size_t>(d) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = poly_div_exact(p, cyclotomic_poly_locked(e, memo));
  memo.emplace(d, p);
  return p;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int d) {
  if (d < 1) throw InvalidInput("cyclotomic index must be positive");
  static std::map<int, std::vector<Int>> memo;
  std::lock_guard<std::mutex> lock(poly_mutex());
  return cyclotomic_poly_locked(d, memo);
}

int euler_phi(int d) {
  int n = 0;
  for (int t = 1; t <= d; ++t)
    if (std::gcd(t, d) == 1) ++n;
  return n;
}

int root_of_unity_order(int d) { return d % 2 == 0 ? d : 2 * d; }

CyclotomicRing::CyclotomicRing(int d)
    : d_(d), phi_(euler_phi(d)), w_(root_of_unity_order(d)), poly_(cyclotomic_polynomial(d)) {}

std::shared_ptr<const CyclotomicRing> CyclotomicRing::get(int d) {
  if (d < 1) throw InvalidInput("cyclotomic index must be positive");
  static std::mutex m;
  static std::map<int, std::shared_ptr<const CyclotomicRing>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  auto r = std::make_shared<const CyclotomicRing>(d);
  cache.emplace(d, r);
  return r;
}

void CyclotomicRing::reduce(std::vector<Int>& v) const {
  const std::size_t phi = static_cast<std::size_t>(phi_);
  for (std::size_t k = v.size(); k-- > phi;) {
    if (sgn(v[k]) == 0) continue;
    Int c = v[k];
    for (std::size_t i = 0; i < phi; ++i)
      if (sgn(poly_[i]) != 0) v[k - phi + i] -= c * poly_[i];
    v[k] = 0;
  }
  v.resize(phi);
}

CycInt::CycInt(int d) : d_(d), c_(static_cast<std::size_t>(CyclotomicRing::get(d)->degree())) {}

const CyclotomicRing& CycInt::ring() const {
  static thread_local std::shared_ptr<const CyclotomicRing> last;
  if (!last || last->d() != d_) last = CyclotomicRing::get(d_);
  return *last;
}

CycInt CycInt::from_int(int d, const Int& n) {
  CycInt x(d);
  x.c_[0] = n;
  return x;
}

CycInt CycInt::zeta_power(int d, long e) {
  std::vector<long> counts(static_cast<std::size_t>(d), 0);
  long r = ((e % d) + d) % d;
  counts[static_cast<std::size_t>(r)] = 1;
  return from_exponent_counts(d, counts);
}

CycInt CycInt::eta_power(int d, long k) {
  const long w = root_of_unity_order(d);
  long r = ((k % w) + w) % w;
  CycInt z = zeta_power(d, r);
  if (d % 2 == 1 && r % 2 == 1) return -z;
  return z;
}

CycInt CycInt::from_coeffs(int d, std::vector<Int> coeffs) {
  CycInt x(d);
  x.ring().reduce(coeffs);
  x.c_ = std::move(coeffs);
  return x;
}

CycInt CycInt::from_exponent_counts(int d, const std::vector<long>& counts) {
  if (counts.size() != static_cast<std::size_t>(d)) throw InvalidInput("exponent histogram must have length d");
  std::vector<Int> v(counts.size());
  for (std::size_t e = 0; e < counts.size(); ++e) v[e] = counts[e];
  return from_coeffs(d, std::move(v));
}

bool CycInt::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

std::optional<Int> CycInt::as_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return std::nullopt;
  return c_.empty() ? Int(0) : c_[0];
}

CycInt CycInt::operator+(const CycInt& o) const {
  if (d_ != o.d_) throw InvalidInput("mixed cyclotomic rings");
  CycInt r(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
  if (d_ != o.d_) throw InvalidInput("mixed cyclotomic rings");
  CycInt r(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  if (d_ != o.d_) throw InvalidInput("mixed cyclotomic rings");
  if (c_.empty()) return *this;
  std::vector<Int> v(2 * c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (sgn(o.c_[j]) != 0) mpz_addmul(v[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
  }
  CycInt r(d_);
  ring().reduce(v);
  r.c_ = std::move(v);
  return r;
}

CycInt CycInt::operator*(const Int& n) const {
  CycInt r(*this);
  for (auto& x : r.c_) x *= n;
  return r;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Int a = abs(c_[i]);
    os << (sgn(c_[i]) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (i == 0 || a != 1) os << a;
    if (i > 0) os << (a != 1 ? "*" : "") << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

CycInt galois_apply(int t, const CycInt& x) {
  const int d = x.d();
  int r = ((t % d) + d) % d;
  if (std::gcd(r, d) != 1) throw InvalidInput("Galois twist must be a unit mod d");
  std::vector<Int> v(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < x.coeffs().size(); ++i)
    v[(i * static_cast<std::size_t>(r)) % static_cast<std::size_t>(d)] += x.coeffs()[i];
  return CycInt::from_coeffs(d, std::move(v));
}

CycInt complex_conjugate(const CycInt& x) { return galois_apply(-1, x); }

Int norm_to_int(const CycInt& x) {
  CycInt p = CycInt::from_int(x.d(), 1);
  for (int t = 1; t <= x.d(); ++t)
    if (std::gcd(t, x.d()) == 1) p = p * galois_apply(t, x);
  auto n = p.as_integer();
  if (!n) throw InternalError("norm is not rational");
  return *n;
}

bool divisible_by(const CycInt& x, const Int& n) {
  if (sgn(n) == 0) throw InvalidInput("division by zero");
  for (const auto& c : x.coeffs())
    if (!mpz_divisible_p(c.get_mpz_t(), n.get_mpz_t())) return false;
  return true;
}

CycInt divide_exact(const CycInt& x, const Int& n) {
  if (!divisible_by(x, n)) throw NotDivisible("cyclotomic integer is not divisible by " + n.get_str());
  std::vector<Int> v(x.coeffs());
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
  return CycInt::from_coeffs(x.d(), std::move(v));
}

std::optional<int> as_root_of_unity(const CycInt& x) {
  const int w = root_of_unity_order(x.d());
  for (int k = 0; k < w; ++k)
    if (CycInt::eta_power(x.d(), k) == x) return k;
  return std::nullopt;
}

std::uint64_t eval_mod_p(const CycInt& x, std::uint64_t r, std::uint64_t p) {
  using u128 = unsigned __int128;
  std::uint64_t acc = 0;
  std::uint64_t pw = 1 % p;
  for (const auto& c : x.coeffs()) {
    Int m;
    mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), p);
    acc = static_cast<std::uint64_t>((acc + static_cast<u128>(m.get_ui()) * pw) % p);
    pw = static_cast<std::uint64_t>(static_cast<u128>(pw) * r % p);
  }
  return acc;
}

}  // namespace diagbr
