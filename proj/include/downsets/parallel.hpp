#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "count.hpp"

namespace downsets {

/// Worker count to use when the caller passes 0.
inline unsigned default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Sum f(i) for i in [0, n) over `jobs` threads. Each thread owns a contiguous
/// block and the block totals are added in block order, so the result and any
/// exception are independent of the thread count.
template <typename F>
Count parallel_sum(std::size_t n, unsigned jobs, F&& f) {
  if (jobs == 0) jobs = default_jobs();
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  if (jobs <= 1) {
    Count total;
    for (std::size_t i = 0; i < n; ++i) total += f(i);
    return total;
  }
  std::vector<Count> partial(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      const std::size_t lo = n * w / jobs;
      const std::size_t hi = n * (w + 1) / jobs;
      try {
        Count sum;
        for (std::size_t i = lo; i < hi; ++i) sum += f(i);
        partial[w] = sum;
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Count total;
  for (const auto& p : partial) total += p;
  return total;
}

/// Run f(i) for i in [0, n) across `jobs` threads; f must only write to slot i
/// of whatever output it fills.
template <typename F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  if (jobs == 0) jobs = default_jobs();
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = n * w / jobs; i < n * (w + 1) / jobs; ++i) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace downsets
