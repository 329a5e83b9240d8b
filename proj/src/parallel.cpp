#include "permsolv/parallel.hpp"

namespace permsolv {

namespace {
std::atomic<Exec> g_default_exec{Exec::parallel};
} // namespace

Exec default_exec() { return g_default_exec.load(); }

void set_default_exec(Exec exec) { g_default_exec.store(exec); }

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace permsolv
