#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "diagbr/fin_ab_group.hpp"
#include "diagbr/groups.hpp"

namespace diagbr {

// Transitive permutation group with the stabilizer of point 0, its normal
// closure N, the projection G -> (G/N)^ab and the coset sum tau of that
// projection over G/S.
class GaloisDatum {
 public:
  explicit GaloisDatum(GroupPtr group);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  int degree() const noexcept { return static_cast<int>(group_->degree()); }
  const SubgroupDatum& stabilizer() const noexcept { return stab_; }
  const SubgroupDatum& normal_closure() const noexcept { return normal_; }
  const AbQuotient& quotient() const noexcept { return quotient_; }
  // One element per left coset of the stabilizer, indexed by the point it sends 0 to.
  const std::vector<std::size_t>& coset_reps() const noexcept { return reps_; }
  const std::vector<long>& tau() const noexcept { return tau_; }
  bool primitive() const;

 private:
  GroupPtr group_;
  SubgroupDatum stab_;
  SubgroupDatum normal_;
  AbQuotient quotient_;
  std::vector<std::size_t> reps_;
  std::vector<long> tau_;
};

// phi(e_u, e_v) = c[u][v] in Z/d for invariant-factor generators e_u of
// (G_f/N_f)^ab (orders m_u) and e_v of (G_g/N_g)^ab (orders n_v).
struct BilinearClass {
  int d = 0;
  std::vector<long> m;
  std::vector<long> n;
  std::vector<std::vector<long>> c;

  long value(const std::vector<long>& x, const std::vector<long>& y) const;
  bool well_formed() const;  // c_uv is killed by gcd(m_u, n_v, d)
};

struct PiResult {
  FinAbGroup pi;
  FinAbGroup hom_group;
  std::vector<BilinearClass> generators;
};

PiResult pi_group(const GaloisDatum& f, const GaloisDatum& g);

// Literal coset-sum formula at (a, b) in G_f x G_g.
long chi_phi(const GaloisDatum& f, const GaloisDatum& g, const BilinearClass& phi, std::size_t a, std::size_t b);

std::optional<FinAbGroup> coprime_shortcut(const GaloisDatum& f, const GaloisDatum& g);

// {x in 2(Z/d) : (n^2 - 1) x = 0 mod d for all n in H}.
FinAbGroup h1_pic_diagonal(int d, const std::vector<int>& h);

enum class Regime { number_field, generic_function_field, custom_r };

struct Assumptions {
  bool linear_disjointness = true;
  bool condition_star = true;
  bool condition_star_star = false;
  bool kummer_degree_is_d = true;  // [L(a^{1/d}) : L] = d, never verified
};

struct BrauerReport {
  FinAbGroup h1_pic;
  Regime regime = Regime::number_field;
  int r = 0;
  FinAbGroup br1_quotient;
  Assumptions assumptions;
};

BrauerReport brauer_quotient_diagonal(int d, const std::vector<int>& h, Regime regime, int r = 0);
std::string regime_name(Regime r);
Regime parse_regime(const std::string& s);

// The a/b rule for k = Q: Z/2^a x Z/3^b.
FinAbGroup k_rational_case(int d);
// Theorem route for k = Q: h1_pic_diagonal with H = all units.
FinAbGroup k_rational_theorem(int d);

enum class SpecialCase { same_cyclic_field, cyclic_times_split };
FinAbGroup special_case_expectations(int d, SpecialCase c);
SpecialCase parse_special_case(const std::string& s);
std::string special_case_name(SpecialCase c);
GroupPtr special_case_group(int d, SpecialCase c);

struct CrosscheckVerdict {
  std::string mode;
  FinAbGroup oracle;
  FinAbGroup formula;
  bool equal = false;
  double oracle_ms = 0;
  double formula_ms = 0;
  std::size_t group_order = 0;
  std::size_t module_rank = 0;
};

// Oracle H^1(G_f x G_g, Lambda) against pi_group.
CrosscheckVerdict crosscheck_product(const GaloisDatum& f, const GaloisDatum& g);
// Oracle on (Z/d)^2 x| H against h1_pic_diagonal.
CrosscheckVerdict crosscheck_diagonal(int d, const std::vector<int>& h);
CrosscheckVerdict crosscheck_special(int d, SpecialCase c);

}  // namespace diagbr
