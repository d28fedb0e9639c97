#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace tabqa {

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static chunking: worker w handles one contiguous range. Results that are
// merged in worker order stay deterministic for a fixed job count.
inline void parallel_chunks(int n, int jobs,
                            const std::function<void(int begin, int end, int worker)>& fn) {
  jobs = resolve_jobs(jobs);
  if (jobs <= 1 || n <= 1) {
    fn(0, n, 0);
    return;
  }
  if (jobs > n) jobs = n;
  std::vector<std::thread> threads;
  int chunk = (n + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    int begin = w * chunk;
    int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace tabqa
