#include <algorithm>
#include <numeric>

#include "diagbr/errors.hpp"
#include "diagbr/groups.hpp"

namespace diagbr {

namespace {

std::u16string key_of(std::span<const std::uint16_t> p) { return std::u16string(p.begin(), p.end()); }

void check_perm(std::size_t degree, const Perm& p) {
  if (p.size() != degree) throw InvalidInput("generator length differs from degree");
  std::vector<bool> hit(degree, false);
  for (auto x : p) {
    if (x >= degree || hit[x]) throw InvalidInput("generator is not a permutation");
    hit[x] = true;
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, const std::vector<Perm>& generators,
                                           std::size_t order_bound, std::string name) {
  if (degree == 0 || degree > 65535) throw InvalidInput("permutation degree out of range");
  for (const auto& p : generators) check_perm(degree, p);

  FiniteGroup g;
  g.name_ = std::move(name);
  g.degree_ = degree;
  const std::size_t ng = generators.size();

  Perm id(degree);
  std::iota(id.begin(), id.end(), std::uint16_t{0});
  g.elements_.insert(g.elements_.end(), id.begin(), id.end());
  g.index_.emplace(key_of(id), 0u);

  Perm prod(degree);
  for (std::size_t cur = 0; cur * degree < g.elements_.size(); ++cur) {
    for (std::size_t k = 0; k < ng; ++k) {
      const std::uint16_t* a = g.elements_.data() + cur * degree;
      for (std::size_t i = 0; i < degree; ++i) prod[i] = a[generators[k][i]];
      auto key = key_of(prod);
      auto it = g.index_.find(key);
      std::uint32_t idx;
      if (it == g.index_.end()) {
        idx = static_cast<std::uint32_t>(g.elements_.size() / degree);
        if (idx >= order_bound)
          throw BudgetExceeded("group order exceeds bound " + std::to_string(order_bound));
        g.index_.emplace(std::move(key), idx);
        g.elements_.insert(g.elements_.end(), prod.begin(), prod.end());
      } else {
        idx = it->second;
      }
      g.right_gen_.push_back(idx);
    }
  }
  g.order_ = g.elements_.size() / degree;
  for (std::size_t k = 0; k < ng; ++k) g.generators_.push_back(g.right_gen_[k]);

  g.inverse_.resize(g.order_);
  Perm inv(degree);
  for (std::size_t e = 0; e < g.order_; ++e) {
    auto p = g.perm(e);
    for (std::size_t i = 0; i < degree; ++i) inv[p[i]] = static_cast<std::uint16_t>(i);
    g.inverse_[e] = static_cast<std::uint32_t>(g.find(inv));
  }
  return g;
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
  std::u16string key(degree_, u'\0');
  auto pa = perm(a);
  auto pb = perm(b);
  for (std::size_t i = 0; i < degree_; ++i) key[i] = pa[pb[i]];
  auto it = index_.find(key);
  if (it == index_.end()) throw InternalError("group not closed under multiplication");
  return it->second;
}

std::size_t FiniteGroup::element_order(std::size_t g) const {
  std::size_t n = 1;
  for (std::size_t x = g; x != 0; x = mul(x, g)) ++n;
  return n;
}

std::size_t FiniteGroup::find(std::span<const std::uint16_t> p) const {
  if (p.size() != degree_) return order_;
  auto it = index_.find(key_of(p));
  return it == index_.end() ? order_ : it->second;
}

bool FiniteGroup::is_transitive() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (auto gen : generators_) {
      std::size_t y = apply(gen, x);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree_;
}

bool SubgroupDatum::contains(std::size_t g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

SubgroupDatum generate_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> list{0};
  in[0] = true;
  for (std::size_t cur = 0; cur < list.size(); ++cur)
    for (auto s : gens) {
      std::size_t y = g.mul(list[cur], s);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  std::sort(list.begin(), list.end());
  return {std::move(list)};
}

SubgroupDatum whole_group(const FiniteGroup& g) {
  SubgroupDatum s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), std::size_t{0});
  return s;
}

SubgroupDatum trivial_subgroup() { return {{0}}; }

SubgroupDatum point_stabilizer(const FiniteGroup& g, std::size_t point) {
  if (point >= g.degree()) throw InvalidInput("stabilizer point out of range");
  SubgroupDatum s;
  for (std::size_t e = 0; e < g.order(); ++e)
    if (g.apply(e, point) == point) s.members.push_back(e);
  return s;
}

std::vector<std::size_t> small_generating_set(const FiniteGroup& g, const SubgroupDatum& s) {
  std::vector<std::size_t> gens;
  SubgroupDatum cur = trivial_subgroup();
  for (auto x : s.members) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = generate_subgroup(g, gens);
    if (cur.size() == s.size()) break;
  }
  return gens;
}

SubgroupDatum normal_closure(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<std::size_t> cur = gens;
  SubgroupDatum s = generate_subgroup(g, cur);
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t n = cur.size();
    for (auto x : g.generators())
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t c = g.mul(g.mul(x, cur[i]), g.inverse(x));
        if (!s.contains(c)) {
          cur.push_back(c);
          s = generate_subgroup(g, cur);
          grew = true;
        }
      }
  }
  return s;
}

bool is_normal(const FiniteGroup& g, const SubgroupDatum& s) {
  for (auto x : g.generators())
    for (auto n : small_generating_set(g, s))
      if (!s.contains(g.mul(g.mul(x, n), g.inverse(x)))) return false;
  return true;
}

bool is_primitive(const FiniteGroup& g, const SubgroupDatum& s) {
  if (s.size() >= g.order()) return false;
  std::vector<std::size_t> base = small_generating_set(g, s);
  std::vector<bool> done(g.order(), false);
  for (auto m : s.members) done[m] = true;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<std::size_t> gens = base;
    gens.push_back(x);
    if (generate_subgroup(g, gens).size() != g.order()) return false;
    for (auto m : s.members) done[g.mul(m, x)] = true;
  }
  return true;
}

FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b, std::size_t order_bound) {
  const std::size_t n = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (auto ga : a.generators()) {
    Perm p(n);
    auto pa = a.perm(ga);
    for (std::size_t i = 0; i < a.degree(); ++i) p[i] = pa[i];
    for (std::size_t i = 0; i < b.degree(); ++i) p[a.degree() + i] = static_cast<std::uint16_t>(a.degree() + i);
    gens.push_back(std::move(p));
  }
  for (auto gb : b.generators()) {
    Perm p(n);
    auto pb = b.perm(gb);
    for (std::size_t i = 0; i < a.degree(); ++i) p[i] = static_cast<std::uint16_t>(i);
    for (std::size_t i = 0; i < b.degree(); ++i) p[a.degree() + i] = static_cast<std::uint16_t>(a.degree() + pb[i]);
    gens.push_back(std::move(p));
  }
  return FiniteGroup::from_permutations(n, gens, order_bound, a.name() + " x " + b.name());
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<std::size_t>>& action,
                               std::size_t order_bound) {
  const std::size_t nn = n.order();
  const std::size_t nh = h.order();
  if (action.size() != nh) throw InvalidInput("action must list one automorphism per element of H");
  for (const auto& phi : action) {
    if (phi.size() != nn) throw InvalidInput("automorphism has the wrong length");
    std::vector<bool> hit(nn, false);
    for (auto x : phi) {
      if (x >= nn || hit[x]) throw InvalidInput("automorphism is not a bijection");
      hit[x] = true;
    }
    for (std::size_t x = 0; x < nn; ++x)
      for (auto s : n.generators())
        if (phi[n.mul(x, s)] != n.mul(phi[x], phi[s])) throw InvalidInput("action is not by automorphisms");
  }
  for (std::size_t y = 0; y < nh; ++y)
    for (auto s : h.generators()) {
      const auto& lhs = action[h.mul(y, s)];
      for (std::size_t x = 0; x < nn; ++x)
        if (lhs[x] != action[y][action[s][x]]) throw InvalidInput("action is not a homomorphism");
    }
  const std::size_t deg = nn + nh;
  if (deg > 65535) throw BudgetExceeded("semidirect product needs too many points");
  std::vector<Perm> gens;
  for (auto x : n.generators()) {
    Perm p(deg);
    for (std::size_t z = 0; z < nn; ++z) p[z] = static_cast<std::uint16_t>(n.mul(x, z));
    for (std::size_t y = 0; y < nh; ++y) p[nn + y] = static_cast<std::uint16_t>(nn + y);
    gens.push_back(std::move(p));
  }
  for (auto s : h.generators()) {
    Perm p(deg);
    for (std::size_t z = 0; z < nn; ++z) p[z] = static_cast<std::uint16_t>(action[s][z]);
    for (std::size_t y = 0; y < nh; ++y) p[nn + y] = static_cast<std::uint16_t>(nn + h.mul(s, y));
    gens.push_back(std::move(p));
  }
  return FiniteGroup::from_permutations(deg, gens, order_bound, n.name() + " x| " + h.name());
}

}  // namespace diagbr
