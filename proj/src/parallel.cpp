#include "diagbr/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace diagbr {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

std::string_view exec_name(Exec e) { return e == Exec::serial ? "serial" : "parallel"; }

}  // namespace diagbr
