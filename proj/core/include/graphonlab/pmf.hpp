#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphonlab/scalar.hpp"

namespace graphonlab {

/// Probability mass function on {0, ..., m}: mass()[k] is the probability
/// of exactly k edges.
class EdgeCountPMF {
 public:
  EdgeCountPMF() : mass_{Scalar(1)} {}

  /// Throws Error(ValueOutOfRange) on a negative entry and
  /// Error(MeasuresDontSumToOne) if the masses do not sum to 1 (exactly, or
  /// within 1e-12 when any entry is floating).
  explicit EdgeCountPMF(std::vector<Scalar> mass);

  std::size_t max_count() const noexcept { return mass_.size() - 1; }
  std::span<const Scalar> mass() const noexcept { return mass_; }
  const Scalar& operator[](std::size_t k) const { return mass_[k]; }
  bool is_exact() const;

  friend bool operator==(const EdgeCountPMF&, const EdgeCountPMF&) = default;

 private:
  std::vector<Scalar> mass_;
};

inline constexpr double kPmfSumTolerance = 1e-12;

}  // namespace graphonlab
