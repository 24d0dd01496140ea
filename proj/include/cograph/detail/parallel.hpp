#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace cograph {

template <typename T>
std::vector<T> parallel_reps(std::uint64_t reps, unsigned threads, const std::function<T(std::uint64_t)>& fn,
                             const Progress& progress) {
  std::vector<std::optional<T>> slots(reps);
  std::atomic<std::uint64_t> next{0}, done{0};
  std::exception_ptr error;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t r = next.fetch_add(1);
      if (r >= reps) return;
      try {
        slots[r].emplace(fn(r));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        next.store(reps);
        return;
      }
      const std::uint64_t d = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard lock(mu);
        progress(d, reps);
      }
    }
  };
  const unsigned t = std::max(1U, threads);
  if (t == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(reps);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace cograph
