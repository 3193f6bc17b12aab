#include "sts/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>

namespace sts {

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STS_WORKERS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // fall through to hardware concurrency
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for_index(std::size_t count, int workers,
                        const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  workers = std::min<std::size_t>(std::max(workers, 1), count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace sts
