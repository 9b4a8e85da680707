#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace wmk {

/// Hardware concurrency, capped by the WMK_THREADS environment variable.
unsigned worker_count();

/// Splits [0, n) into contiguous chunks, runs fn(chunk_begin, chunk_end, out)
/// for each on its own worker, and returns the per-chunk results in chunk
/// order so that any associative merge is deterministic.
template <typename Result>
std::vector<Result> parallel_chunks(std::uint64_t n,
                                    const std::function<void(std::uint64_t, std::uint64_t, Result&)>& fn) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(worker_count(), n));
  std::vector<Result> results(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  const std::uint64_t step = (n + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = std::min(n, w * step), hi = std::min(n, lo + step);
    if (workers == 1) {
      fn(lo, hi, results[0]);
      break;
    }
    threads.emplace_back([&, lo, hi, w] { fn(lo, hi, results[static_cast<std::size_t>(w)]); });
  }
  for (auto& t : threads) t.join();
  return results;
}

}  // namespace wmk
