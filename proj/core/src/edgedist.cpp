#include "graphonlab/edgedist.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "graphonlab/detail/enumerate.hpp"

namespace graphonlab {

namespace {

template <class T>
struct PolyState {
  T weight{1};
  std::vector<T> coeffs{T(1)};  // generating polynomial of the edges placed so far
};

template <class T>
std::vector<T> pmf_sum(const SimpleGraph& s, const StepGraphon& w, unsigned threads) {
  const std::size_t q = w.part_count();
  const std::size_t n = s.vertex_count();
  const std::size_t m = s.edge_count();
  const auto mu = w.parts_as<T>();
  const auto values = w.values_as<T>();
  const auto back = detail::back_edges(s);
  const auto split = detail::split_tasks(q, n);
  std::vector<std::vector<T>> partial(split.task_count, std::vector<T>(m + 1, T(0)));

  detail::enumerate_assignments(
      n, q, threads, PolyState<T>{},
      [&](const PolyState<T>& parent, Vertex v, std::size_t part, const std::vector<std::size_t>& phi,
          PolyState<T>& child) {
        child.weight = parent.weight * mu[part];
        child.coeffs = parent.coeffs;
        auto& c = child.coeffs;
        for (const auto& be : back[v]) {
          const T& x = values[phi[be.other] * q + part];
          const T stay = T(1) - x;
          // Multiply by (stay + x z), schoolbook.
          c.push_back(T(0));
          for (std::size_t k = c.size() - 1; k > 0; --k) {
            T next = c[k] * stay;
            next += c[k - 1] * x;
            c[k] = std::move(next);
          }
          c[0] *= stay;
        }
        return true;
      },
      [&](std::size_t task, const PolyState<T>& leaf) {
        auto& acc = partial[task];
        for (std::size_t k = 0; k < leaf.coeffs.size(); ++k) acc[k] += leaf.weight * leaf.coeffs[k];
      });

  std::vector<T> total(m + 1, T(0));
  for (const auto& p : partial) {
    for (std::size_t k = 0; k <= m; ++k) total[k] += p[k];
  }
  return total;
}

template <class T>
T subset_probability(const SimpleGraph& s, const StepGraphon& w, const std::vector<bool>& is_kept,
                     unsigned threads) {
  const std::size_t q = w.part_count();
  const std::size_t n = s.vertex_count();
  const auto mu = w.parts_as<T>();
  const auto values = w.values_as<T>();
  const auto back = detail::back_edges(s);
  const auto split = detail::split_tasks(q, n);
  std::vector<T> partial(split.task_count, T(0));

  detail::enumerate_assignments(
      n, q, threads, T(1),
      [&](const T& parent, Vertex v, std::size_t part, const std::vector<std::size_t>& phi, T& child) {
        child = parent * mu[part];
        for (const auto& be : back[v]) {
          const T& x = values[phi[be.other] * q + part];
          child *= is_kept[be.edge_index] ? x : T(T(1) - x);
          if (child == 0) return false;
        }
        return true;
      },
      [&](std::size_t task, const T& weight) { partial[task] += weight; });

  T total(0);
  for (const auto& p : partial) total += p;
  return total;
}

template <class T>
std::vector<Scalar> wrap(const std::vector<T>& xs) {
  std::vector<Scalar> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(make_scalar(x));
  return out;
}

}  // namespace

EdgeCountPMF edge_count_pmf_exact(const SimpleGraph& s, const StepGraphon& w, const ComputeOptions& options) {
  detail::check_guardrail(detail::assignment_count(w.part_count(), s.vertex_count()), options,
                          "edge_count_pmf_exact");
  if (w.is_exact()) return EdgeCountPMF(wrap(pmf_sum<mpq_class>(s, w, options.threads)));
  auto mass = pmf_sum<double>(s, w, options.threads);
  for (auto& p : mass) p = std::max(p, 0.0);
  return EdgeCountPMF(wrap(mass));
}

Scalar subgraph_probability(const SimpleGraph& s, const StepGraphon& w, std::span<const Edge> kept,
                            const ComputeOptions& options) {
  const auto edges = s.edges();
  std::vector<bool> is_kept(edges.size(), false);
  for (Edge e : kept) {
    if (e.u > e.v) std::swap(e.u, e.v);
    const auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) {
      throw Error(Errc::NotASubset, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} is not an edge of the template");
    }
    is_kept[static_cast<std::size_t>(it - edges.begin())] = true;
  }
  detail::check_guardrail(detail::assignment_count(w.part_count(), s.vertex_count()), options,
                          "subgraph_probability");
  if (w.is_exact()) return Scalar(subset_probability<mpq_class>(s, w, is_kept, options.threads));
  return Scalar(subset_probability<double>(s, w, is_kept, options.threads));
}

mpz_class binomial_coefficient(std::size_t n, std::size_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

EdgeCountPMF binomial_pmf(std::size_t m, const Scalar& p) {
  if (p < Scalar(0) || p > Scalar(1)) throw Error(Errc::ValueOutOfRange, "p = " + p.str() + " is outside [0,1]");
  const Scalar stay = Scalar(1) - p;
  std::vector<Scalar> mass;
  mass.reserve(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    mass.push_back(Scalar(mpq_class(binomial_coefficient(m, k))) * pow(p, static_cast<unsigned>(k)) *
                   pow(stay, static_cast<unsigned>(m - k)));
  }
  return EdgeCountPMF(std::move(mass));
}

Scalar total_variation(const EdgeCountPMF& a, const EdgeCountPMF& b) {
  if (a.max_count() != b.max_count()) {
    throw Error(Errc::LengthMismatch, "pmfs over {0.." + std::to_string(a.max_count()) + "} and {0.." +
                                          std::to_string(b.max_count()) + "}");
  }
  Scalar sum(0);
  for (std::size_t k = 0; k <= a.max_count(); ++k) sum += abs(a[k] - b[k]);
  return sum / Scalar(2);
}

Scalar normalized_falling_moment(const EdgeCountPMF& pmf, std::size_t k) {
  const std::size_t m = pmf.max_count();
  if (k > m) throw Error(Errc::BadK, "k=" + std::to_string(k) + " exceeds m=" + std::to_string(m));
  Scalar sum(0);
  for (std::size_t i = k; i <= m; ++i) sum += pmf[i] * Scalar(mpq_class(binomial_coefficient(i, k)));
  return sum / Scalar(mpq_class(binomial_coefficient(m, k)));
}

}  // namespace graphonlab
