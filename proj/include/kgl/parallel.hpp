#pragma once

// Deterministic data parallelism: an index range is split into contiguous
// blocks, one per worker, and block results are folded back together in block
// order.  Output is therefore independent of the thread count, which the CLI
// relies on for byte-identical runs.

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

namespace kgl {

// Global worker cap.  0 resets to the hardware default.
void set_max_threads(unsigned n);
unsigned max_threads();

namespace detail {

inline void run_blocks(std::uint64_t n, unsigned workers,
                       const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
  if (n == 0) return;
  if (workers > n) workers = static_cast<unsigned>(n);
  if (workers <= 1) {
    body(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  std::uint64_t chunk = n / workers, extra = n % workers, begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    pool.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

// fn(begin, end) -> R on each block; results combined left to right into init.
template <class R, class Fn, class Combine>
R parallel_blocks(std::uint64_t n, R init, Fn&& fn, Combine&& comb) {
  R out = std::move(init);
  if (n == 0) return out;
  unsigned workers = max_threads();
  if (workers > n) workers = static_cast<unsigned>(n);
  if (workers == 0) workers = 1;
  std::vector<R> parts(workers);
  detail::run_blocks(n, workers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
    parts[w] = fn(b, e);
  });
  for (auto& p : parts) comb(out, std::move(p));
  return out;
}

// Side-effect loop over [0, n); each worker owns a disjoint contiguous range,
// so writes to per-index slots need no synchronization.
template <class Fn>
void parallel_range(std::uint64_t n, Fn&& fn) {
  detail::run_blocks(n, max_threads(),
                     [&](unsigned, std::uint64_t b, std::uint64_t e) { fn(b, e); });
}

}  // namespace kgl
