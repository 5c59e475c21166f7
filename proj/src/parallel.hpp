#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <type_traits>
#include <vector>

// Optional threading for the hot contraction loops, controlled by the
// TREEQAOA_THREADS environment variable (default 1).  Work is split into
// fixed-size chunks and per-chunk partials are combined in chunk order, so
// results are bit-identical no matter how many threads run.

namespace treeqaoa::detail {

inline int thread_count() {
  static const int n = [] {
    if (const char* env = std::getenv("TREEQAOA_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 1;
  }();
  return n;
}

template <typename Term>
auto chunked_sum(std::size_t n, const Term& term) {
  using Sum = std::decay_t<decltype(term(std::size_t{0}))>;
  constexpr std::size_t chunk = std::size_t{1} << 12;
  const std::size_t nchunks = (n + chunk - 1) / chunk;
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), nchunks);
  std::vector<Sum> partial(nchunks, Sum{});
  auto run = [&](std::size_t c) {
    const std::size_t lo = c * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    Sum s{};
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    partial[c] = s;
  };
  if (workers <= 1) {
    for (std::size_t c = 0; c < nchunks; ++c) run(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t c; (c = next.fetch_add(1)) < nchunks;) run(c);
      });
    for (auto& t : pool) t.join();
  }
  Sum total{};
  for (const auto& s : partial) total += s;
  return total;
}

// body(i) must write only to slot i-owned state
template <typename Body>
void parallel_map(std::size_t n, const Body& body) {
  const int workers = thread_count();
  if (workers <= 1 || n < 512) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  constexpr std::size_t chunk = 128;
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t c; (c = next.fetch_add(1)) * chunk < n;) {
        const std::size_t lo = c * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) body(i);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace treeqaoa::detail
