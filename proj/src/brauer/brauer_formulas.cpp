#include "diagbr/brauer_formulas.hpp"

#include <chrono>
#include <memory>
#include <numeric>

#include "diagbr/cohomology.hpp"
#include "diagbr/errors.hpp"
#include "diagbr/smith.hpp"
#include "diagbr/surface_lattices.hpp"

namespace diagbr {

namespace {

long mod(long x, long m) { return ((x % m) + m) % m; }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

GaloisDatum::GaloisDatum(GroupPtr group) : group_(std::move(group)) {
  if (!group_) throw InvalidInput("Galois datum needs a group");
  if (!group_->is_transitive()) throw InvalidInput("Galois group must act transitively on the roots");
  const FiniteGroup& g = *group_;
  stab_ = point_stabilizer(g, 0);
  if (stab_.size() * g.degree() != g.order()) throw InternalError("orbit-stabilizer failed");
  normal_ = diagbr::normal_closure(g, small_generating_set(g, stab_));
  quotient_ = ab_quotient(g, normal_);

  reps_.assign(g.degree(), g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t p = g.apply(x, 0);
    if (reps_[p] == g.order()) reps_[p] = x;
  }
  tau_.assign(quotient_.moduli.size(), 0);
  for (auto x : reps_) {
    const auto& r = quotient_.project(x);
    for (std::size_t u = 0; u < tau_.size(); ++u) tau_[u] = mod(tau_[u] + r[u], quotient_.moduli[u]);
  }
}

bool GaloisDatum::primitive() const { return is_primitive(*group_, stab_); }

long BilinearClass::value(const std::vector<long>& x, const std::vector<long>& y) const {
  long acc = 0;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < n.size(); ++v) acc = mod(acc + mod(x[u] * y[v], d) * c[u][v], d);
  return acc;
}

bool BilinearClass::well_formed() const {
  if (d <= 0 || c.size() != m.size()) return false;
  for (std::size_t u = 0; u < m.size(); ++u) {
    if (c[u].size() != n.size()) return false;
    for (std::size_t v = 0; v < n.size(); ++v) {
      long g = std::gcd(std::gcd(m[u], n[v]), static_cast<long>(d));
      if (mod(c[u][v] * g, d) != 0) return false;
    }
  }
  return true;
}

PiResult pi_group(const GaloisDatum& f, const GaloisDatum& g) {
  if (f.degree() != g.degree()) throw InvalidInput("the two Galois data have different degrees");
  const long d = f.degree();
  const auto& mu = f.quotient().moduli;
  const auto& nv = g.quotient().moduli;
  const std::size_t nu = mu.size(), nvv = nv.size();

  std::vector<Int> orders;
  std::vector<long> scale;
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t v = 0; v < nvv; ++v) {
      long gg = std::gcd(std::gcd(mu[u], nv[v]), d);
      orders.emplace_back(gg);
      scale.push_back(d / gg);
    }

  // chi_phi(a, e) = phi(pi_f(a), tau_g) and chi_phi(e, b) = phi(tau_f, pi_g(b)).
  std::vector<std::vector<long>> rows;
  for (auto a : f.group().generators()) {
    const auto& x = f.quotient().project(a);
    std::vector<long> row;
    for (std::size_t u = 0; u < nu; ++u)
      for (std::size_t v = 0; v < nvv; ++v) row.push_back(mod(x[u] * g.tau()[v], d) * scale[u * nvv + v] % d);
    rows.push_back(std::move(row));
  }
  for (auto b : g.group().generators()) {
    const auto& y = g.quotient().project(b);
    std::vector<long> row;
    for (std::size_t u = 0; u < nu; ++u)
      for (std::size_t v = 0; v < nvv; ++v) row.push_back(mod(f.tau()[u] * y[v], d) * scale[u * nvv + v] % d);
    rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size(), orders.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < orders.size(); ++j) m(i, j) = rows[i][j];

  PiResult out;
  out.hom_group = FinAbGroup::from_cyclic_orders(orders);
  TorsionKernel k = kernel_mod(m, orders, Int(d));
  out.pi = k.group;
  for (const auto& t : k.generators) {
    BilinearClass phi;
    phi.d = static_cast<int>(d);
    phi.m = mu;
    phi.n = nv;
    phi.c.assign(nu, std::vector<long>(nvv, 0));
    for (std::size_t u = 0; u < nu; ++u)
      for (std::size_t v = 0; v < nvv; ++v) phi.c[u][v] = mod(t[u * nvv + v].get_si() * scale[u * nvv + v], d);
    out.generators.push_back(std::move(phi));
  }
  return out;
}

long chi_phi(const GaloisDatum& f, const GaloisDatum& g, const BilinearClass& phi, std::size_t a, std::size_t b) {
  if (!phi.well_formed()) throw InvalidInput("bilinear class is not well formed");
  const auto& pa = f.quotient().project(a);
  const auto& pb = g.quotient().project(b);
  long acc = 0;
  for (auto y : g.coset_reps()) acc += phi.value(pa, g.quotient().project(y));
  for (auto x : f.coset_reps()) acc += phi.value(f.quotient().project(x), pb);
  return mod(acc, phi.d);
}

std::optional<FinAbGroup> coprime_shortcut(const GaloisDatum& f, const GaloisDatum& g) {
  Int a = f.quotient().group.order();
  Int b = g.quotient().group.order();
  Int c;
  mpz_gcd(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (c == 1) return FinAbGroup::trivial();
  return std::nullopt;
}

FinAbGroup h1_pic_diagonal(int d, const std::vector<int>& h) {
  if (d < 1) throw InvalidInput("degree must be positive");
  for (int n : h)
    if (std::gcd(mod(n, d), static_cast<long>(d)) != 1) throw InvalidInput("H must consist of units mod d");
  long count = 0;
  for (long x = 0; x < d; x += (d % 2 == 0 ? 2 : 1)) {
    bool ok = true;
    for (int n : h)
      if (mod((static_cast<long>(n) * n - 1) % d * x, d) != 0) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return FinAbGroup::cyclic(Int(count));
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::number_field: return "number_field";
    case Regime::generic_function_field: return "generic_function_field";
    case Regime::custom_r: return "custom_r";
  }
  return "?";
}

Regime parse_regime(const std::string& s) {
  if (s == "number_field") return Regime::number_field;
  if (s == "generic_function_field") return Regime::generic_function_field;
  if (s == "custom_r") return Regime::custom_r;
  throw InvalidInput("unknown regime: " + s);
}

BrauerReport brauer_quotient_diagonal(int d, const std::vector<int>& h, Regime regime, int r) {
  BrauerReport rep;
  rep.h1_pic = h1_pic_diagonal(d, h);
  rep.regime = regime;
  switch (regime) {
    case Regime::number_field:
      rep.r = d;
      rep.br1_quotient = rep.h1_pic;
      break;
    case Regime::generic_function_field:
      rep.r = 1;
      rep.assumptions.condition_star_star = true;
      rep.br1_quotient = FinAbGroup::trivial();
      break;
    case Regime::custom_r:
      if (r < 1 || d % r != 0) throw InvalidInput("r must be a positive divisor of d");
      rep.r = r;
      rep.br1_quotient = rep.h1_pic.torsion_of(Int(r));
      break;
  }
  return rep;
}

FinAbGroup k_rational_case(int d) {
  if (d < 1) throw InvalidInput("degree must be positive");
  long two = d % 8 == 0 ? 4 : (d % 4 == 0 ? 2 : 1);
  long three = d % 3 == 0 ? 3 : 1;
  return FinAbGroup::from_cyclic_orders({Int(two), Int(three)});
}

FinAbGroup k_rational_theorem(int d) { return h1_pic_diagonal(d, units_mod(d)); }

FinAbGroup special_case_expectations(int d, SpecialCase c) {
  if (d < 2) throw InvalidInput("degree must be at least 2");
  if (c == SpecialCase::same_cyclic_field) return FinAbGroup::trivial();
  return FinAbGroup::from_cyclic_orders(std::vector<Int>(static_cast<std::size_t>(d - 2), Int(d)));
}

SpecialCase parse_special_case(const std::string& s) {
  if (s == "same_cyclic_field" || s == "same-field" || s == "same_field") return SpecialCase::same_cyclic_field;
  if (s == "cyclic_times_split" || s == "split") return SpecialCase::cyclic_times_split;
  throw InvalidInput("unknown special case: " + s);
}

std::string special_case_name(SpecialCase c) {
  return c == SpecialCase::same_cyclic_field ? "same_cyclic_field" : "cyclic_times_split";
}

GroupPtr special_case_group(int d, SpecialCase c) {
  return std::make_shared<const FiniteGroup>(c == SpecialCase::same_cyclic_field ? joint::same_shift(d)
                                                                                 : joint::first_shift(d));
}

namespace {

CrosscheckVerdict run_oracle(const std::string& mode, int d, GroupPtr joint_group, auto formula) {
  CrosscheckVerdict v;
  v.mode = mode;
  auto t0 = std::chrono::steady_clock::now();
  v.formula = formula();
  v.formula_ms = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  LambdaLattice lam(d);
  LatticeModule m = lam.module(joint_group);
  v.oracle = h1(m);
  v.oracle_ms = ms_since(t0);
  v.group_order = joint_group->order();
  v.module_rank = m.rank();
  v.equal = v.oracle == v.formula;
  return v;
}

}  // namespace

CrosscheckVerdict crosscheck_product(const GaloisDatum& f, const GaloisDatum& g) {
  if (f.degree() != g.degree()) throw InvalidInput("the two Galois data have different degrees");
  auto joint_group = std::make_shared<const FiniteGroup>(product_group(f.group(), g.group()));
  return run_oracle("product", f.degree(), joint_group, [&] { return pi_group(f, g).pi; });
}

CrosscheckVerdict crosscheck_diagonal(int d, const std::vector<int>& h) {
  auto joint_group = std::make_shared<const FiniteGroup>(joint::diagonal(d, h));
  return run_oracle("diagonal", d, joint_group, [&] { return h1_pic_diagonal(d, unit_subgroup(d, h)); });
}

CrosscheckVerdict crosscheck_special(int d, SpecialCase c) {
  return run_oracle(special_case_name(c), d, special_case_group(d, c),
                    [&] { return special_case_expectations(d, c); });
}

}  // namespace diagbr
