#include "ospcent/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ospcent {

namespace {

std::atomic<std::size_t> g_override{0};

std::size_t env_threads() {
  const char* s = std::getenv("OSPCENT_THREADS");
  if (!s) return 0;
  long v = std::strtol(s, nullptr, 10);
  return v > 0 ? static_cast<std::size_t>(v) : 0;
}

}  // namespace

std::size_t thread_count() {
  std::size_t n = g_override.load();
  if (n == 0) n = env_threads();
  if (n == 0) {
    std::size_t hw = std::thread::hardware_concurrency();
    n = std::min<std::size_t>(hw == 0 ? 1 : hw, 8);
  }
  return std::min<std::size_t>(n, 64);
}

void set_thread_count(std::size_t n) { g_override.store(n); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  std::size_t workers = std::min(thread_count(), n);
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    std::size_t lo = w * chunk;
    if (lo >= n) break;
    std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  fn(0, std::min(n, chunk));
  for (auto& t : pool) t.join();
}

}  // namespace ospcent
