#include "eulerspline/enumerate.hpp"

#include <algorithm>
#include <thread>

namespace eulerspline {

unsigned worker_count(const EnumerationLimits& limits) {
  if (limits.threads > 0) return limits.threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace eulerspline
