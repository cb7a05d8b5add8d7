#pragma once

#include <cstdint>

#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"
#include "graphonlab/options.hpp"
#include "graphonlab/scalar.hpp"

namespace graphonlab {

/// Homomorphism density t(F, W) by enumerating every map V(F) -> parts:
///   sum_phi prod_v mu_phi(v) * prod_{ij in E(F)} W_phi(i) phi(j).
/// Exact when W is rational. Subtrees whose partial product is zero are
/// pruned. Errors: TooLarge when q^|V(F)| exceeds options.limit.
Scalar t_exact(const SimpleGraph& f, const StepGraphon& w, const ComputeOptions& options = {});

struct DensityEstimate {
  Scalar mean{0.0};
  Scalar std_error{0.0};  // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
};

/// Monte Carlo estimate of t(F, W) from part-index draws. Sample i uses
/// StreamRng(seed, i), and partial sums are merged in a fixed block order,
/// so the result depends only on (F, W, samples, seed).
/// Errors: BadSize if samples == 0.
DensityEstimate t_monte_carlo(const SimpleGraph& f, const StepGraphon& w, std::uint64_t samples,
                              std::uint64_t seed, const ComputeOptions& options = {});

}  // namespace graphonlab
