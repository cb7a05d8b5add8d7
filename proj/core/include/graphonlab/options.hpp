#pragma once

#include <cstdint>

namespace graphonlab {

/// Default ceiling on assignment evaluations for the exact enumerators.
inline constexpr std::uint64_t kDefaultEvaluationLimit = 100'000'000;

struct ComputeOptions {
  std::uint64_t limit = kDefaultEvaluationLimit;
  /// Skip the guardrail entirely.
  bool force = false;
  /// Worker cap; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

}  // namespace graphonlab
