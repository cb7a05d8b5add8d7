#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphonlab/scalar.hpp"

namespace graphonlab {

/// A graphon that is constant on the rectangles of a finite partition of
/// [0,1] into parts of positive measure. Immutable once constructed; the
/// only way to obtain one is through validate_graphon() and the
/// transformations below, so every instance satisfies:
///   - values is exactly symmetric with entries in [0,1];
///   - every part measure is > 0 and the measures sum to 1.
///
/// Exactness is all-or-nothing: if any input entry was floating, every
/// stored entry is floating.
class StepGraphon {
 public:
  std::size_t part_count() const noexcept { return parts_.size(); }
  std::span<const Scalar> parts() const noexcept { return parts_; }
  const Scalar& part(std::size_t i) const { return parts_[i]; }
  const Scalar& value(std::size_t i, std::size_t j) const { return values_[i * parts_.size() + j]; }
  std::vector<std::vector<Scalar>> value_matrix() const;
  bool is_exact() const noexcept { return exact_; }

  /// Dense numeric views used by the enumeration kernels.
  template <class T>
  std::vector<T> parts_as() const {
    std::vector<T> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_) out.push_back(scalar_as<T>(p));
    return out;
  }
  template <class T>
  std::vector<T> values_as() const {
    std::vector<T> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(scalar_as<T>(v));
    return out;
  }

  friend bool operator==(const StepGraphon& a, const StepGraphon& b);

 private:
  friend StepGraphon validate_graphon(std::vector<Scalar>, std::vector<std::vector<Scalar>>);
  StepGraphon() = default;

  std::vector<Scalar> parts_;
  std::vector<Scalar> values_;  // row-major q*q
  bool exact_ = true;
};

/// Floating measures may miss 1 by at most this much; they are then renormalized.
inline constexpr double kMeasureSumTolerance = 1e-12;

/// Errors: AsymmetricValues, ValueOutOfRange, NonpositiveMeasure,
/// MeasuresDontSumToOne, MalformedGraphon (shape mismatch or q = 0).
StepGraphon validate_graphon(std::vector<Scalar> parts, std::vector<std::vector<Scalar>> values);

/// One part of measure 1 with kernel value p. Errors: ValueOutOfRange.
StepGraphon constant_graphon(const Scalar& p);

/// Splits part i into measures fraction*mu_i and (1-fraction)*mu_i and
/// duplicates its row/column. The result is weakly isomorphic to W.
/// Errors: BadFraction unless 0 < fraction < 1, BadIndex.
StepGraphon refine_part(const StepGraphon& W, std::size_t i, const Scalar& fraction);

/// Part perm[i] of the result is part i of W. Errors: NotAPermutation.
StepGraphon permute_parts(const StepGraphon& W, std::span<const std::size_t> perm);

/// True if every kernel entry equals p (exactly, or within tol on the floating path).
bool is_constant(const StepGraphon& W, const Scalar& p, double tol = 0.0);

}  // namespace graphonlab
