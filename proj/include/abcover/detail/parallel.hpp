#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace abcover::detail {

/// Index of the calling OpenMP thread (0 outside parallel regions).
int current_thread();
/// Upper bound on thread indices seen by current_thread() in a new region.
int thread_slots();

/// Runs body(i) for i in [0, count) on the OpenMP pool. The first exception
/// thrown by any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  std::exception_ptr failure;
  std::mutex guard;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace abcover::detail
