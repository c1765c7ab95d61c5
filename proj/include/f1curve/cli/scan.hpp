#pragma once

// Exhaustive scans of S(q) over a height range.
//
// Heights are processed in ascending batches; inside a batch workers pull
// heights from a shared counter and keep private top-k lists, which are
// merged after the batch. The ranking is a total order (S descending, then
// a, then b), so the merged result does not depend on the worker count or
// on scheduling.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "f1curve/arithmetic.hpp"

namespace f1curve::cli {

struct ScanConfig {
  std::uint64_t height_min = 2;
  std::uint64_t height_max = 100;
  std::uint64_t top_k = 10;
  unsigned workers = 1;
  std::optional<std::string> checkpoint;

  // ArgumentError unless 2 <= height_min <= height_max and top_k >= 1;
  // MagnitudeError for heights beyond 2^62.
  void validate() const;
};

struct ScanEntry {
  std::int64_t a = 0;
  std::int64_t b = 1;
  DefectSum sum;
};

// S descending, then (a, b) ascending.
[[nodiscard]] bool ranks_before(const ScanEntry& x, const ScanEntry& y);

struct ScanResult {
  std::vector<ScanEntry> top;
  std::uint64_t scanned = 0;
  std::uint64_t skipped = 0;  // items beyond the factorization limits
  std::uint64_t last_height = 0;
  bool resumed = false;
};

// Every reduced q = a/b with max(|a|, b) = h, in scan order: |a| < h with
// b = h, then |a| = h with b <= h, each with + before -.
void for_each_of_height(std::uint64_t h,
                        const std::function<void(std::int64_t, std::int64_t)>& fn);

// The scanned quantity for one q.
[[nodiscard]] ScanEntry evaluate_entry(std::int64_t a, std::int64_t b);

// Runs the scan, resuming from and updating cfg.checkpoint when set.
[[nodiscard]] ScanResult run_scan(const ScanConfig& cfg);

// F1CURVE_THREADS if set to a positive integer, else 1.
[[nodiscard]] unsigned default_workers();

}  // namespace f1curve::cli
