#pragma once

// The acceptance suite: every claim checked against brute-force references.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dimon {

// Factorization words must have length <= kWordLengthFactor * n.
inline constexpr int kWordLengthFactor = 5;

// Samples per degree for the randomized fast-isometry comparison.
inline constexpr int kFastIsometrySamples = 100000;

struct VerifyOptions {
  // Every criterion's degree range is clipped to n <= max_n. The default
  // covers all stated ranges.
  int max_n = 12;
  unsigned workers = 0;  // 0 = hardware concurrency
  std::uint64_t seed = 0x5eed2024ULL;
  // Criterion id to force into failure (harness self-test); 0 = none.
  int inject_failure = 0;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool skipped = false;  // range empty after clipping
  std::string detail;    // summary, or the first counterexample
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 = no stated budget
};

inline constexpr int kCriterionCount = 12;

// Runs one criterion (1..kCriterionCount).
CriterionResult run_criterion(int id, VerifyOptions const& options);

// Runs all criteria in order, reporting each as it finishes.
std::vector<CriterionResult> run_acceptance(
    VerifyOptions const& options,
    std::function<void(CriterionResult const&)> const& on_result = {});

std::string format_result_line(CriterionResult const& r);

}  // namespace dimon
