#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace eulerspline::detail {

/// Runs task(t, histogram) for t in [0, tasks) on up to `workers` threads.
/// Each worker owns its histogram; the results are summed, so the outcome
/// does not depend on scheduling.
template <typename Task>
std::vector<std::uint64_t> parallel_histogram(std::size_t tasks, std::size_t bins, unsigned workers,
                                              Task task) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(bins, 0));
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned w) {
    for (std::size_t t = next++; t < tasks; t = next++) task(t, partial[w]);
  };
  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w);
  }
  std::vector<std::uint64_t> total(bins, 0);
  for (const auto& h : partial) {
    for (std::size_t b = 0; b < bins; ++b) total[b] += h[b];
  }
  return total;
}

}  // namespace eulerspline::detail
