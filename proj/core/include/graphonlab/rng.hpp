#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "graphonlab/scalar.hpp"

namespace graphonlab {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Small counter-keyed generator. A stream is identified by (seed, index),
/// so trial i draws the same numbers no matter which worker runs it.
class StreamRng {
 public:
  using result_type = std::uint64_t;

  StreamRng(std::uint64_t seed, std::uint64_t index) noexcept
      : state_(mix64(seed ^ mix64(index ^ 0xd1b54a32d192ed03ULL))) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits; identical on every platform.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Inverse-CDF sampler over part indices. Cumulative measures are summed
/// in the Scalar tower (exactly for rational graphons) and rounded to
/// double once, so the bias is at the 1e-16 scale.
class PartSampler {
 public:
  explicit PartSampler(std::span<const Scalar> measures);

  std::size_t operator()(StreamRng& rng) const noexcept {
    const double u = rng.uniform();
    for (std::size_t i = 0; i + 1 < cumulative_.size(); ++i) {
      if (u < cumulative_[i]) return i;
    }
    return cumulative_.size() - 1;
  }

 private:
  std::vector<double> cumulative_;
};

}  // namespace graphonlab
