#ifndef PERMSOLV_PARALLEL_HPP
#define PERMSOLV_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permsolv {

/// Execution policy for the exhaustive scan kernels. Both policies return
/// identical results; the serial path is the reference the parallel one is
/// tested against.
enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec exec);

/// Number of worker threads the parallel policy will use.
int worker_count();

namespace detail {

class ExceptionSlot {
public:
  void capture() {
    std::lock_guard lock(mutex_);
    if (!error_)
      error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_)
      std::rethrow_exception(error_);
  }

private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

} // namespace detail

/// Smallest i in [0, n) with pred(i) true, or nullopt. pred is evaluated for
/// every index below the result; indices above it may or may not be visited.
template <class Pred>
std::optional<std::size_t> find_first(std::size_t n, Pred &&pred,
                                      Exec exec = default_exec()) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i))
        return i;
    return std::nullopt;
  }
#ifdef _OPENMP
  std::atomic<std::size_t> best{n};
  detail::ExceptionSlot error;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i >= best.load(std::memory_order_relaxed))
      continue;
    try {
      if (pred(i)) {
        std::size_t current = best.load(std::memory_order_relaxed);
        while (i < current &&
               !best.compare_exchange_weak(current, i,
                                           std::memory_order_relaxed)) {
        }
      }
    } catch (...) {
      error.capture();
      best.store(0, std::memory_order_relaxed);
    }
  }
  error.rethrow();
  const std::size_t found = best.load();
  if (found == n)
    return std::nullopt;
  return found;
#else
  return find_first(n, pred, Exec::serial);
#endif
}

/// Number of i in [0, n) with pred(i) true.
template <class Pred>
std::uint64_t count_if(std::size_t n, Pred &&pred,
                       Exec exec = default_exec()) {
  std::uint64_t total = 0;
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i))
        ++total;
    return total;
  }
#ifdef _OPENMP
  detail::ExceptionSlot error;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      if (pred(static_cast<std::size_t>(k)))
        ++total;
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  return total;
#else
  return count_if(n, pred, Exec::serial);
#endif
}

/// Calls body(i) for every i in [0, n).
template <class Body>
void for_each_index(std::size_t n, Body &&body, Exec exec = default_exec()) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i)
      body(i);
    return;
  }
#ifdef _OPENMP
  detail::ExceptionSlot error;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
#else
  for_each_index(n, body, Exec::serial);
#endif
}

} // namespace permsolv

#endif
