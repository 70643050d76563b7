#pragma once

#include <exception>
#include <thread>
#include <vector>

namespace locoh {

// Static partition of [0, count) over the given thread count.  fn(index) must
// be safe to run concurrently for distinct indices; callers write results into
// per-index slots, so the output order never depends on scheduling.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t nt = std::min<std::size_t>(threads, count);
  std::vector<std::exception_ptr> errors(nt);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (std::size_t i = t; i < count; i += nt) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace locoh
