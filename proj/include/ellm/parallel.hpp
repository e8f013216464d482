#pragma once

#include <cstdint>
#include <future>
#include <thread>
#include <vector>

namespace ellm {

// Global cap on worker threads; 0 means hardware default.
void set_max_threads(unsigned t);
unsigned effective_threads();

// Splits [0, n) into contiguous chunks and runs fn(begin, end) on each,
// returning the per-chunk results in chunk order. Callers keep determinism
// by merging exact values (integer counts, min indices), never
// order-sensitive floating sums.
template <typename Partial, typename ChunkFn>
std::vector<Partial> run_chunked(std::uint64_t n, ChunkFn fn) {
  unsigned workers = effective_threads();
  if (n == 0) return {};
  if (workers <= 1 || n < 2 * workers) {
    std::vector<Partial> out;
    out.push_back(fn(std::uint64_t{0}, n));
    return out;
  }
  std::uint64_t chunk = (n + workers - 1) / workers;
  std::vector<std::future<Partial>> futs;
  for (std::uint64_t begin = 0; begin < n; begin += chunk) {
    std::uint64_t end = begin + chunk < n ? begin + chunk : n;
    futs.push_back(std::async(std::launch::async, [=]() { return fn(begin, end); }));
  }
  std::vector<Partial> out;
  out.reserve(futs.size());
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

}  // namespace ellm
