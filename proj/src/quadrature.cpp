#include "rz/quadrature.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rz {

int thread_count() {
#ifdef _OPENMP
  if (const char* env = std::getenv("RZ_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void apply_thread_env() {
#ifdef _OPENMP
  omp_set_num_threads(thread_count());
#endif
}

}  // namespace rz
