#include <algorithm>
#include <atomic>

#include "diagbr/cohomology.hpp"
#include "diagbr/errors.hpp"
#include "diagbr/smith.hpp"

namespace diagbr {

CayleyTree cayley_tree(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const std::size_t none = n;
  CayleyTree t;
  t.parent_element.assign(n, none);
  t.parent_generator.assign(n, 0);
  t.depth.assign(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < g.num_generators(); ++k) {
      std::size_t y = g.right_gen(x, k);
      if (seen[y]) continue;
      seen[y] = true;
      t.parent_element[y] = x;
      t.parent_generator[y] = k;
      t.depth[y] = t.depth[x] + 1;
    }
  return t;
}

LatticeModule::LatticeModule(GroupPtr group, std::vector<IntMatrix> generator_actions, ActionCache cache,
                             Exec exec)
    : group_(std::move(group)), generators_(std::move(generator_actions)) {
  if (!group_) throw InvalidInput("module needs a group");
  if (generators_.size() != group_->num_generators())
    throw InvalidInput("one action matrix per group generator is required");
  rank_ = generators_.empty() ? 0 : generators_.front().rows();
  for (const auto& a : generators_) {
    if (a.rows() != rank_ || a.cols() != rank_) throw InvalidInput("action matrices must be square of equal size");
    if (!is_unimodular(a)) throw InvalidInput("action matrix is not invertible over Z");
  }
  if (generators_.empty()) return;
  if (cache == ActionCache::generators_only) return;

  const FiniteGroup& g = *group_;
  const std::size_t n = g.order();
  const std::size_t ng = g.num_generators();
  std::vector<Mat64> gens;
  for (const auto& a : generators_) gens.push_back(Mat64::from(a));

  CayleyTree tree = cayley_tree(g);
  std::size_t max_depth = *std::max_element(tree.depth.begin(), tree.depth.end());
  std::vector<std::vector<std::size_t>> layers(max_depth + 1);
  for (std::size_t x = 0; x < n; ++x) layers[tree.depth[x]].push_back(x);

  std::atomic<bool> overflow{false};
  elements_.assign(n, Mat64());
  elements_[0] = Mat64::identity(rank_);
  for (std::size_t l = 1; l <= max_depth; ++l) {
    const auto& layer = layers[l];
    const long len = static_cast<long>(layer.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (long i = 0; i < len; ++i) {
      std::size_t y = layer[static_cast<std::size_t>(i)];
      try {
        elements_[y] = elements_[tree.parent_element[y]] * gens[tree.parent_generator[y]];
      } catch (const Overflow&) {
        overflow = true;
      }
    }
    if (overflow) throw Overflow("element action entries exceed int64");
  }

  // Every Cayley edge must agree with the tree products.
  bool ok = true;
  const long total = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) reduction(&& : ok) if (exec == Exec::parallel)
  for (long xi = 0; xi < total; ++xi) {
    std::size_t x = static_cast<std::size_t>(xi);
    for (std::size_t k = 0; k < ng; ++k) {
      std::size_t y = g.right_gen(x, k);
      if (tree.parent_element[y] == x && tree.parent_generator[y] == k) continue;
      try {
        if (!(elements_[x] * gens[k] == elements_[y])) ok = false;
      } catch (const Overflow&) {
        ok = false;
      }
    }
  }
  if (!ok) throw InvalidInput("generator matrices do not define an action of the group");
}

const Mat64& LatticeModule::action(std::size_t g) const {
  if (elements_.empty()) throw InvalidInput("module was built without the element cache");
  return elements_.at(g);
}

IntMatrix element_action(const LatticeModule& m, std::size_t g) {
  if (m.has_element_cache()) return m.action(g).to_int_matrix();
  CayleyTree tree = cayley_tree(m.group());
  std::vector<std::size_t> word;
  for (std::size_t x = g; x != 0; x = tree.parent_element[x]) word.push_back(tree.parent_generator[x]);
  IntMatrix r = IntMatrix::identity(m.rank());
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = r * m.generator_action(*it);
  return r;
}

IntMatrix invariants(const LatticeModule& m) {
  const std::size_t r = m.rank();
  const std::size_t ng = m.group().num_generators();
  IntMatrix stacked(ng * r, r);
  for (std::size_t k = 0; k < ng; ++k) {
    const IntMatrix& a = m.generator_action(k);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) stacked(k * r + i, j) = a(i, j) - (i == j ? 1 : 0);
  }
  return kernel_basis(stacked);
}

}  // namespace diagbr
