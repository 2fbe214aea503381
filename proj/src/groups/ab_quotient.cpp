#include "diagbr/errors.hpp"
#include "diagbr/groups.hpp"
#include "diagbr/smith.hpp"

namespace diagbr {

AbQuotient ab_quotient(const FiniteGroup& g, const SubgroupDatum& n) {
  if (!is_normal(g, n)) throw InvalidInput("ab_quotient needs a normal subgroup");
  const auto& gens = g.generators();
  const std::size_t m = gens.size();

  std::vector<std::size_t> kgens = small_generating_set(g, n);
  for (auto x : gens)
    for (auto y : gens) kgens.push_back(g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y))));
  SubgroupDatum k = normal_closure(g, kgens);

  // Cosets gK, labelled in order of first element.
  std::vector<long> label(g.order(), -1);
  std::vector<std::size_t> rep;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (label[x] >= 0) continue;
    for (auto y : k.members) label[g.mul(x, y)] = static_cast<long>(rep.size());
    rep.push_back(x);
  }
  const std::size_t nc = rep.size();

  // Spanning tree of the coset graph; each non-tree edge is a relation.
  std::vector<IntVector> word(nc);
  std::vector<bool> seen(nc, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  word[0] = IntVector(m);
  std::vector<IntVector> relations;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t c = queue[q];
    for (std::size_t s = 0; s < m; ++s) {
      std::size_t t = static_cast<std::size_t>(label[g.right_gen(rep[c], s)]);
      IntVector w = word[c];
      w[s] += 1;
      if (!seen[t]) {
        seen[t] = true;
        word[t] = std::move(w);
        queue.push_back(t);
      } else {
        for (std::size_t i = 0; i < m; ++i) w[i] -= word[t][i];
        relations.push_back(std::move(w));
      }
    }
  }

  IntMatrix rel = IntMatrix::from_columns(relations, m);
  SmithForm f = smith_normal_form(rel);
  if (f.rank != m) throw InternalError("abelian quotient of a finite group has free part");

  AbQuotient out;
  std::vector<std::size_t> rows;
  std::vector<Int> chain;
  for (std::size_t i = 0; i < m; ++i)
    if (f.D(i, i) != 1) {
      rows.push_back(i);
      chain.push_back(f.D(i, i));
      out.moduli.push_back(f.D(i, i).get_si());
    }
  out.group = FinAbGroup::from_divisor_chain(chain, 0);

  std::vector<std::vector<long>> coset_res(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    IntVector y = f.U * word[c];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Int v;
      mpz_fdiv_r(v.get_mpz_t(), y[rows[r]].get_mpz_t(), chain[r].get_mpz_t());
      coset_res[c].push_back(v.get_si());
    }
  }
  out.residues.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) out.residues[x] = coset_res[static_cast<std::size_t>(label[x])];
  return out;
}

}  // namespace diagbr
