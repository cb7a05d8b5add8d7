#include "graphonlab/homomorphism.hpp"

#include <cmath>
#include <vector>

#include "graphonlab/detail/enumerate.hpp"
#include "graphonlab/rng.hpp"

namespace graphonlab {

namespace {

template <class T>
T density_sum(const SimpleGraph& f, const StepGraphon& w, unsigned threads) {
  const std::size_t q = w.part_count();
  const std::size_t n = f.vertex_count();
  const auto mu = w.parts_as<T>();
  const auto values = w.values_as<T>();
  const auto back = detail::back_edges(f);
  const auto split = detail::split_tasks(q, n);
  std::vector<T> partial(split.task_count, T(0));

  detail::enumerate_assignments(
      n, q, threads, T(1),
      [&](const T& parent, Vertex v, std::size_t part, const std::vector<std::size_t>& phi, T& child) {
        child = parent * mu[part];
        for (const auto& be : back[v]) {
          child *= values[phi[be.other] * q + part];
          if (child == 0) return false;
        }
        return true;
      },
      [&](std::size_t task, const T& weight) { partial[task] += weight; });

  T total(0);
  for (const auto& p : partial) total += p;
  return total;
}

struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
};

// Chan et al. pairwise merge; exact zero spread stays exactly zero.
Moments merge(const Moments& a, const Moments& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  Moments out;
  out.count = a.count + b.count;
  const double delta = b.mean - a.mean;
  const double nb = static_cast<double>(b.count) / static_cast<double>(out.count);
  out.mean = a.mean + delta * nb;
  out.m2 = a.m2 + b.m2 + delta * delta * static_cast<double>(a.count) * nb;
  return out;
}

}  // namespace

Scalar t_exact(const SimpleGraph& f, const StepGraphon& w, const ComputeOptions& options) {
  detail::check_guardrail(detail::assignment_count(w.part_count(), f.vertex_count()), options, "t_exact");
  if (w.is_exact()) return Scalar(density_sum<mpq_class>(f, w, options.threads));
  return Scalar(density_sum<double>(f, w, options.threads));
}

DensityEstimate t_monte_carlo(const SimpleGraph& f, const StepGraphon& w, std::uint64_t samples,
                              std::uint64_t seed, const ComputeOptions& options) {
  if (samples == 0) throw Error(Errc::BadSize, "t_monte_carlo needs at least one sample");
  const std::size_t q = w.part_count();
  const std::size_t n = f.vertex_count();
  const PartSampler draw_part(w.parts());
  const auto values = w.values_as<double>();
  const auto edges = f.edges();

  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<Moments> per_block(blocks);

  detail::parallel_for(blocks, options.threads, [&](std::size_t b) {
    std::vector<std::size_t> phi(n);
    Moments acc;
    const std::uint64_t end = std::min<std::uint64_t>(samples, (b + 1) * kBlock);
    for (std::uint64_t i = b * kBlock; i < end; ++i) {
      StreamRng rng(seed, i);
      for (auto& part : phi) part = draw_part(rng);
      double x = 1.0;
      for (const auto& e : edges) x *= values[phi[e.u] * q + phi[e.v]];
      ++acc.count;
      const double delta = x - acc.mean;
      acc.mean += delta / static_cast<double>(acc.count);
      acc.m2 += delta * (x - acc.mean);
    }
    per_block[b] = acc;
  });

  Moments total;
  for (const auto& m : per_block) total = merge(total, m);

  DensityEstimate est;
  est.samples = samples;
  est.mean = Scalar(total.mean);
  if (samples > 1) {
    const double variance = std::max(0.0, total.m2 / static_cast<double>(samples - 1));
    est.std_error = Scalar(std::sqrt(variance / static_cast<double>(samples)));
  }
  return est;
}

}  // namespace graphonlab
