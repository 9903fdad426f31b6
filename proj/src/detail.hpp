#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>

namespace trigraph::detail {

class Stopwatch {
 public:
  std::chrono::nanoseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start_);
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
};

// Smallest r with r*r >= x.
inline std::uint64_t ceil_sqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while (r * r < x) ++r;
  return r;
}

// Largest r with r*r <= x.
inline std::uint64_t floor_sqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace trigraph::detail
