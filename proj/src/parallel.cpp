#include <omp.h>

#include "abcover/detail/parallel.hpp"
#include "abcover/scan.hpp"

namespace abcover {

namespace {
int configured_workers = 0;
}

void set_worker_count(int workers) {
  configured_workers = workers > 0 ? workers : 0;
  omp_set_num_threads(workers > 0 ? workers : omp_get_num_procs());
}

int worker_count() { return configured_workers > 0 ? configured_workers : omp_get_max_threads(); }

namespace detail {

int current_thread() { return omp_get_thread_num(); }
int thread_slots() { return omp_get_max_threads(); }

}  // namespace detail
}  // namespace abcover
