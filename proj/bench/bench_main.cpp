// Serial twin vs OpenMP kernel timings. Each pair must return identical data.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <memory>
#include <string>

#include "diagbr/cohomology.hpp"
#include "diagbr/fermat_characters.hpp"
#include "diagbr/groups.hpp"
#include "diagbr/jacobi_sums.hpp"
#include "diagbr/parallel.hpp"
#include "diagbr/surface_lattices.hpp"

using namespace diagbr;

namespace {

int reps = 3;

// Best of reps, in milliseconds.
double best_ms(const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

bool same_tables(const HTable& a, const HTable& b) {
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!(a.values[i].j == b.values[i].j) || a.values[i].h_root != b.values[i].h_root) return false;
  return true;
}

bool same_modules(const LatticeModule& a, const LatticeModule& b) {
  if (a.rank() != b.rank()) return false;
  for (std::size_t g = 0; g < a.group().order(); ++g) {
    const auto &x = a.action(g), &y = b.action(g);
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j)
        if (x(i, j) != y(i, j)) return false;
  }
  return true;
}

template <class T, class Eq>
bool row(const char* name, const std::function<T(Exec)>& kernel, Eq eq) {
  T s, p;
  const double ts = best_ms([&] { s = kernel(Exec::serial); });
  const double tp = best_ms([&] { p = kernel(Exec::parallel); });
  const bool same = eq(s, p);
  std::printf("%-34s %12.2f %12.2f %8.2fx  %s\n", name, ts, tp, ts / tp, same ? "identical" : "DIFFERENT");
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  if (quick) reps = 1;
  std::printf("openmp %s, %d threads, best of %d\n", openmp_enabled() ? "on" : "off", max_threads(), reps);
  std::printf("%-34s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");

  bool ok = true;
  auto eq = [](const auto& a, const auto& b) { return a == b; };

  const int sd = quick ? 60 : 150;
  ok &= row<std::vector<CharQuadruple>>(
      ("enumerate_s_flat d=" + std::to_string(sd)).c_str(), [&](Exec e) { return enumerate_s_flat(sd, e); }, eq);

  const auto chars = enumerate_s_flat(12);
  const auto primes = find_split_primes(12, quick ? 3000 : 20000);
  ok &= row<HTable>(("h_table d=12, " + std::to_string(primes.size()) + " primes").c_str(),
                    [&](Exec e) { return h_table(12, chars, primes, e); }, same_tables);

  const int ld = quick ? 6 : 8;
  const LambdaLattice lambda(ld);
  const auto group = std::make_shared<const FiniteGroup>(joint::diagonal(ld, units_mod(ld)));
  ok &= row<std::shared_ptr<LatticeModule>>(
      ("Lambda module d=" + std::to_string(ld) + ", |G|=" + std::to_string(group->order())).c_str(),
      [&](Exec e) { return std::make_shared<LatticeModule>(lambda.module(group, ActionCache::all_elements, e)); },
      [](const auto& a, const auto& b) { return same_modules(*a, *b); });

  const int od = quick ? 8 : 16;
  ok &= row<CycInt>(("omega_pairing d=" + std::to_string(od)).c_str(),
                    [&](Exec e) { return omega_pairing(od, 1, 1, e); }, eq);

  return ok ? 0 : 1;
}
