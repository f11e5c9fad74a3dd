#pragma once

// Fork/join helpers over contiguous index ranges. Each worker owns one
// contiguous chunk, and partial results are combined in chunk order, so a
// reduction is deterministic for any worker count as long as `combine` is
// associative.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace dedekind {

/// 0 means "use available parallelism".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

template <typename T, typename ChunkFn, typename Combine>
T parallel_reduce(std::int64_t begin, std::int64_t end, unsigned threads, T init, ChunkFn chunk_fn, Combine combine) {
  if (end <= begin) return init;
  const std::int64_t n = end - begin;
  const auto workers = static_cast<std::int64_t>(std::min<std::int64_t>(resolve_threads(threads), n));
  if (workers <= 1) return combine(std::move(init), chunk_fn(begin, end));

  std::vector<T> partial(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t w = 0; w < workers; ++w) {
      const std::int64_t lo = begin + n * w / workers;
      const std::int64_t hi = begin + n * (w + 1) / workers;
      pool.emplace_back([&partial, &errors, &chunk_fn, w, lo, hi] {
        const auto slot = static_cast<std::size_t>(w);
        try {
          partial[slot] = chunk_fn(lo, hi);
        } catch (...) {
          errors[slot] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T acc = std::move(init);
  for (auto& p : partial) acc = combine(std::move(acc), std::move(p));
  return acc;
}

/// out[i - begin] = fn(i) for i in [begin, end).
template <typename T, typename Fn>
std::vector<T> parallel_map(std::int64_t begin, std::int64_t end, unsigned threads, Fn fn) {
  std::vector<T> out(static_cast<std::size_t>(std::max<std::int64_t>(0, end - begin)));
  if (out.empty()) return out;
  parallel_reduce<int>(begin, end, threads, 0,
                       [&](std::int64_t lo, std::int64_t hi) {
                         for (std::int64_t i = lo; i < hi; ++i) out[static_cast<std::size_t>(i - begin)] = fn(i);
                         return 0;
                       },
                       [](int, int) { return 0; });
  return out;
}

}  // namespace dedekind
