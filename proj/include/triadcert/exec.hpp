#pragma once

// Execution policy for the enumeration kernels.
//
// Every enumeration in the library is a scan over a dense index range
// [0, count) in a fixed deterministic order. jobs == 1 selects the serial
// reference loop; anything else runs the OpenMP version. Both must return
// identical results: a parallel scan reports the smallest matching index, and
// collecting scans merge per-index buckets in index order.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include <omp.h>

namespace triadcert {

struct Exec {
  int jobs = 0;  // 0: OpenMP default, 1: serial reference

  static Exec serial() { return Exec{1}; }
  static Exec parallel(int jobs = 0) { return Exec{jobs == 1 ? 2 : jobs}; }
  bool is_serial() const { return jobs == 1; }
  int threads() const { return jobs > 0 ? jobs : omp_get_max_threads(); }
};

namespace par {

template <class Pred>
std::optional<std::uint64_t> first_match_serial(std::uint64_t count, Pred&& pred) {
  for (std::uint64_t i = 0; i < count; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

// Indices past the current best are skipped, so every index below the
// reported one has been examined.
template <class Pred>
std::optional<std::uint64_t> first_match_omp(std::uint64_t count, Pred&& pred, int threads) {
  std::atomic<std::uint64_t> best{count};
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    if (pred(idx)) {
      std::uint64_t cur = best.load();
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
  }
  const std::uint64_t b = best.load();
  if (b == count) return std::nullopt;
  return b;
}

template <class Pred>
std::optional<std::uint64_t> first_match(std::uint64_t count, Pred&& pred, const Exec& exec) {
  if (exec.is_serial()) return first_match_serial(count, pred);
  return first_match_omp(count, pred, exec.threads());
}

// Runs body(i) for every i and concatenates the returned vectors in index order.
template <class T, class Body>
std::vector<T> collect(std::uint64_t count, Body&& body, const Exec& exec) {
  std::vector<std::vector<T>> buckets(count);
  if (exec.is_serial()) {
    for (std::uint64_t i = 0; i < count; ++i) buckets[i] = body(i);
  } else {
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.threads())
    for (std::int64_t i = 0; i < n; ++i) buckets[static_cast<std::size_t>(i)] = body(static_cast<std::uint64_t>(i));
  }
  std::vector<T> out;
  for (auto& b : buckets) std::move(b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace par
}  // namespace triadcert
