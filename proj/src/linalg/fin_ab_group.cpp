#include "diagbr/fin_ab_group.hpp"

#include <sstream>
#include <utility>

#include "diagbr/errors.hpp"
#include "diagbr/smith.hpp"

namespace diagbr {

FinAbGroup FinAbGroup::cyclic(const Int& n) { return from_cyclic_orders({n}); }

FinAbGroup FinAbGroup::free(std::size_t rank) {
  FinAbGroup g;
  g.free_rank_ = rank;
  return g;
}

FinAbGroup FinAbGroup::from_divisor_chain(std::vector<Int> factors, std::size_t free_rank) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] <= 1) throw InvalidInput("invariant factor must exceed 1");
    if (i > 0 && !mpz_divisible_p(factors[i].get_mpz_t(), factors[i - 1].get_mpz_t()))
      throw InvalidInput("invariant factors must form a divisor chain");
  }
  FinAbGroup g;
  g.factors_ = std::move(factors);
  g.free_rank_ = free_rank;
  return g;
}

FinAbGroup FinAbGroup::from_cyclic_orders(const std::vector<Int>& orders) {
  IntMatrix m(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (sgn(orders[i]) < 0) throw InvalidInput("negative cyclic order");
    m(i, i) = orders[i];
  }
  return cokernel_invariants(m);
}

FinAbGroup FinAbGroup::product(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Int> orders = a.factors_;
  orders.insert(orders.end(), b.factors_.begin(), b.factors_.end());
  FinAbGroup g = from_cyclic_orders(orders);
  g.free_rank_ = a.free_rank_ + b.free_rank_;
  return g;
}

Int FinAbGroup::order() const {
  if (free_rank_ != 0) throw InvalidInput("order of an infinite group");
  Int n = 1;
  for (const auto& f : factors_) n *= f;
  return n;
}

Int FinAbGroup::exponent() const {
  if (free_rank_ != 0) throw InvalidInput("exponent of an infinite group");
  return factors_.empty() ? Int(1) : factors_.back();
}

FinAbGroup FinAbGroup::torsion_of(const Int& r) const {
  std::vector<Int> orders;
  for (const auto& f : factors_) {
    Int g;
    mpz_gcd(g.get_mpz_t(), f.get_mpz_t(), r.get_mpz_t());
    orders.push_back(g);
  }
  return from_cyclic_orders(orders);
}

bool FinAbGroup::embeds_in(const FinAbGroup& other) const {
  if (free_rank_ > other.free_rank_) return false;
  const auto& a = factors_;
  const auto& b = other.factors_;
  if (a.size() > b.size()) return false;
  for (std::size_t i = 1; i <= a.size(); ++i)
    if (!mpz_divisible_p(b[b.size() - i].get_mpz_t(), a[a.size() - i].get_mpz_t())) return false;
  return true;
}

std::vector<long> FinAbGroup::factors_as_long() const {
  std::vector<long> out;
  for (const auto& f : factors_) {
    if (!f.fits_slong_p()) throw Overflow("invariant factor exceeds long");
    out.push_back(f.get_si());
  }
  return out;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (const auto& f : factors_) {
    os << (first ? "" : " x ") << "Z/" << f;
    first = false;
  }
  return os.str();
}

bool FinAbGroup::operator==(const FinAbGroup& o) const {
  return free_rank_ == o.free_rank_ && factors_ == o.factors_;
}

}  // namespace diagbr
