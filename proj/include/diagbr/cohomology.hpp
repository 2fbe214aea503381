#pragma once

#include <cstddef>
#include <vector>

#include "diagbr/fin_ab_group.hpp"
#include "diagbr/groups.hpp"
#include "diagbr/int_matrix.hpp"
#include "diagbr/mat64.hpp"
#include "diagbr/parallel.hpp"

namespace diagbr {

inline constexpr std::size_t kDefaultRankBound = 200;

enum class ActionCache {
  all_elements,    // every element action is built and checked against the generators
  generators_only  // only generator matrices; Cayley-graph routines refuse such modules
};

// Z-lattice of finite rank with a left action of a finite group, given on
// the group's generators by unimodular matrices.
class LatticeModule {
 public:
  LatticeModule(GroupPtr group, std::vector<IntMatrix> generator_actions,
                ActionCache cache = ActionCache::all_elements, Exec exec = Exec::parallel);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t rank() const noexcept { return rank_; }
  bool has_element_cache() const noexcept { return !elements_.empty(); }

  const IntMatrix& generator_action(std::size_t k) const { return generators_.at(k); }
  // Requires ActionCache::all_elements.
  const Mat64& action(std::size_t g) const;

 private:
  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<IntMatrix> generators_;
  std::vector<Mat64> elements_;
};

// Breadth-first parents of the group's Cayley graph: parent[h] = (g, k)
// with h = g * s_k, the first such pair in (g, k) order.
struct CayleyTree {
  std::vector<std::size_t> parent_element;
  std::vector<std::size_t> parent_generator;
  std::vector<std::size_t> depth;
};
CayleyTree cayley_tree(const FiniteGroup& g);

// Columns form a Z-basis of M^G.
IntMatrix invariants(const LatticeModule& m);

struct H1Options {
  // Scan every Cayley-graph equation and check each against the final
  // cocycle lattice, instead of stopping once the rank bound is met.
  bool exhaustive = false;
  std::size_t max_order = kDefaultOrderBound;
  std::size_t max_rank = kDefaultRankBound;
  std::size_t max_bytes = std::size_t{1} << 30;
};

struct H1Result {
  FinAbGroup group;
  std::size_t unknowns = 0;
  std::size_t rows_scanned = 0;
  std::size_t rows_selected = 0;
  std::size_t cocycle_rank = 0;
  bool stopped_early = false;
  bool used_mpz = false;
};

// H^1 from the cocycle equations of the Cayley graph.
H1Result h1_detailed(const LatticeModule& m, const H1Options& opt = {});
FinAbGroup h1(const LatticeModule& m, const H1Options& opt = {});

// H^1 as the torsion of Z^{mr} / <(rho(s_k) - 1) v>. Valid because cocycles
// form the saturation of the coboundaries for a finite group.
FinAbGroup h1_coboundary_torsion(const LatticeModule& m);

// For a cyclic group <sigma> of the given order acting on Z^r.
FinAbGroup h1_cyclic(const IntMatrix& sigma, std::size_t order);
FinAbGroup tate_h0_cyclic(const IntMatrix& sigma, std::size_t order);

// Action matrix of an arbitrary element, computed from a word in the
// generators. Works without the element cache.
IntMatrix element_action(const LatticeModule& m, std::size_t g);

}  // namespace diagbr
