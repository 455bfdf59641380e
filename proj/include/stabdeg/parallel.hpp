#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace stabdeg {

/// Number of partitions to use when the caller passes 0.
inline std::size_t default_partitions() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

/// Splits [0, count) into `partitions` contiguous ranges and runs
/// fn(begin, end, part) for each on its own thread. Results are whatever fn
/// writes into per-part slots; callers merge them in part order, so the
/// outcome never depends on scheduling.
template <class Fn>
void run_partitioned(std::uint64_t count, std::size_t partitions, Fn&& fn) {
  if (partitions == 0) partitions = default_partitions();
  partitions = static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(partitions, count)));
  const std::uint64_t chunk = count / partitions;
  const std::uint64_t extra = count % partitions;

  std::vector<std::exception_ptr> errors(partitions);
  std::vector<std::thread> workers;
  workers.reserve(partitions);
  std::uint64_t begin = 0;
  for (std::size_t p = 0; p < partitions; ++p) {
    const std::uint64_t end = begin + chunk + (p < extra ? 1 : 0);
    workers.emplace_back([&, begin, end, p] {
      try {
        fn(begin, end, p);
      } catch (...) {
        errors[p] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Slot count matching run_partitioned's clamping.
inline std::size_t partition_slots(std::uint64_t count, std::size_t partitions) {
  if (partitions == 0) partitions = default_partitions();
  return static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(partitions, count)));
}

}  // namespace stabdeg
