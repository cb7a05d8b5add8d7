#include "graphonlab/sampler.hpp"

#include <algorithm>

#include "graphonlab/detail/parallel.hpp"
#include "graphonlab/error.hpp"
#include "graphonlab/rng.hpp"

namespace graphonlab {

PartSampler::PartSampler(std::span<const Scalar> measures) {
  Scalar running(0);
  cumulative_.reserve(measures.size());
  for (const auto& mu : measures) {
    running += mu;
    cumulative_.push_back(running.to_double());
  }
}

namespace {

struct DoubleKernel {
  explicit DoubleKernel(const StepGraphon& w)
      : q(w.part_count()), values(w.values_as<double>()), draw_part(w.parts()) {}

  double at(std::size_t a, std::size_t b) const { return values[a * q + b]; }

  std::size_t q;
  std::vector<double> values;
  PartSampler draw_part;
};

// Parts for every vertex first, then one uniform per template edge in
// sorted edge order. Returns the number of kept edges; fills `kept` if given.
std::size_t draw_subgraph(const SimpleGraph& s, const DoubleKernel& kernel, StreamRng& rng,
                          std::vector<std::size_t>& phi, EdgeSubset* kept) {
  phi.resize(s.vertex_count());
  for (auto& part : phi) part = kernel.draw_part(rng);
  std::size_t count = 0;
  for (const auto& e : s.edges()) {
    if (rng.uniform() < kernel.at(phi[e.u], phi[e.v])) {
      ++count;
      if (kept != nullptr) kept->push_back(e);
    }
  }
  return count;
}

}  // namespace

SimpleGraph sample_graph(std::size_t n, const StepGraphon& w, std::uint64_t seed) {
  if (n < 1) throw Error(Errc::BadSize, "sample_graph needs n >= 1");
  const DoubleKernel kernel(w);
  StreamRng rng(seed, 0);
  std::vector<std::size_t> x(n);
  for (auto& part : x) part = kernel.draw_part(rng);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.uniform() < kernel.at(x[i], x[j])) edges.push_back({i, j});
    }
  }
  return SimpleGraph(n, std::move(edges));
}

EdgeSubset sample_subgraph(const SimpleGraph& s, const StepGraphon& w, std::uint64_t seed) {
  const DoubleKernel kernel(w);
  StreamRng rng(seed, 0);
  std::vector<std::size_t> phi;
  EdgeSubset kept;
  draw_subgraph(s, kernel, rng, phi, &kept);
  return kept;
}

SampleReport empirical_edge_pmf(const SimpleGraph& s, const StepGraphon& w, std::uint64_t trials,
                                std::uint64_t seed, const ComputeOptions& options) {
  if (trials == 0) throw Error(Errc::BadSize, "empirical_edge_pmf needs at least one trial");
  const DoubleKernel kernel(w);
  const std::size_t m = s.edge_count();

  constexpr std::uint64_t kBlock = 8192;
  const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
  std::vector<std::vector<std::uint64_t>> per_block(blocks, std::vector<std::uint64_t>(m + 1, 0));

  detail::parallel_for(blocks, options.threads, [&](std::size_t b) {
    std::vector<std::size_t> phi;
    auto& hist = per_block[b];
    const std::uint64_t end = std::min<std::uint64_t>(trials, (b + 1) * kBlock);
    for (std::uint64_t t = b * kBlock; t < end; ++t) {
      StreamRng rng(seed, t);
      ++hist[draw_subgraph(s, kernel, rng, phi, nullptr)];
    }
  });

  SampleReport report;
  report.trials = trials;
  report.seed = seed;
  report.counts.assign(m + 1, 0);
  for (const auto& hist : per_block) {
    for (std::size_t k = 0; k <= m; ++k) report.counts[k] += hist[k];
  }
  std::vector<Scalar> mass;
  mass.reserve(m + 1);
  for (auto c : report.counts) mass.emplace_back(static_cast<double>(c) / static_cast<double>(trials));
  report.empirical = EdgeCountPMF(std::move(mass));
  return report;
}

}  // namespace graphonlab
