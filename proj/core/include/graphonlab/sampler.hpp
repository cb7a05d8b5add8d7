#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "graphonlab/catalog.hpp"
#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"
#include "graphonlab/options.hpp"
#include "graphonlab/pmf.hpp"

namespace graphonlab {

/// W-random graph on n vertices: part indices drawn from the measures,
/// then each pair {i, j} (in lexicographic order) becomes an edge with
/// probability W_{x_i x_j}. Deterministic in seed. Errors: BadSize if n < 1.
SimpleGraph sample_graph(std::size_t n, const StepGraphon& w, std::uint64_t seed);

/// One draw from G(S, W): assign parts to V(S) and keep each edge of S
/// independently with its kernel probability. Uses stream (seed, 0).
EdgeSubset sample_subgraph(const SimpleGraph& s, const StepGraphon& w, std::uint64_t seed);

struct SampleReport {
  EdgeCountPMF empirical;  // floating
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> counts;  // raw histogram, index = kept edges
};

/// Histogram of |sample_subgraph| over `trials` draws; trial t uses stream
/// (seed, t). The result is independent of options.threads.
/// Errors: BadSize if trials == 0.
SampleReport empirical_edge_pmf(const SimpleGraph& s, const StepGraphon& w, std::uint64_t trials,
                                std::uint64_t seed, const ComputeOptions& options = {});

}  // namespace graphonlab
