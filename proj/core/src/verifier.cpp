#include "graphonlab/verifier.hpp"

#include <cmath>

#include "graphonlab/catalog.hpp"
#include "graphonlab/detail/enumerate.hpp"
#include "graphonlab/edgedist.hpp"
#include "graphonlab/error.hpp"
#include "graphonlab/homomorphism.hpp"

namespace graphonlab {

namespace {

bool within(const Scalar& gap, double tol) {
  if (gap.is_exact()) return gap.is_zero();
  return std::abs(gap.to_double()) <= tol;
}

Scalar max_deviation(std::span<const Scalar> xs, const Scalar& level) {
  Scalar worst(0);
  for (const auto& x : xs) {
    const Scalar d = abs(x - level);
    if (worst < d) worst = d;
  }
  return worst;
}

Scalar max_deviation(const StepGraphon& w, const Scalar& level) {
  std::vector<Scalar> entries;
  for (const auto& row : w.value_matrix()) entries.insert(entries.end(), row.begin(), row.end());
  return max_deviation(entries, level);
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ConsistentWithTheorem: return "ConsistentWithTheorem";
    case Verdict::ConstantGraphon: return "ConstantGraphon";
    case Verdict::NonbinomialEdgeCounts: return "NonbinomialEdgeCounts";
    case Verdict::NoC4Precondition: return "NoC4Precondition";
  }
  return "Unknown";
}

Check make_check(std::string name, const Scalar& lhs, const Scalar& rhs, double tol) {
  Check c{std::move(name), lhs, rhs, abs(lhs - rhs), false};
  c.pass = within(c.gap, tol);
  return c;
}

std::vector<Scalar> degree_vector(const StepGraphon& w) {
  const std::size_t q = w.part_count();
  std::vector<Scalar> degrees;
  degrees.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    Scalar d = w.is_exact() ? Scalar(0) : Scalar(0.0);
    for (std::size_t j = 0; j < q; ++j) d += w.part(j) * w.value(i, j);
    degrees.push_back(d);
  }
  return degrees;
}

Scalar degree_variance(const StepGraphon& w, const ComputeOptions& options) {
  return t_exact(star(2), w, options) - pow(t_exact(path(1), w, options), 2);
}

Scalar average_subgraph_density(const SimpleGraph& g, std::size_t k, const StepGraphon& w,
                                const ComputeOptions& options) {
  const std::size_t m = g.edge_count();
  if (k > m) throw Error(Errc::BadK, "k=" + std::to_string(k) + " exceeds m=" + std::to_string(m));
  const mpz_class subsets = binomial_coefficient(m, k);
  detail::check_guardrail(static_cast<long double>(subsets.get_d()) *
                              detail::assignment_count(w.part_count(), g.vertex_count()),
                          options, "average_subgraph_density");
  ComputeOptions inner = options;
  inner.force = true;
  Scalar sum = w.is_exact() ? Scalar(0) : Scalar(0.0);
  for_each_k_edge_subset(g, k, [&](const EdgeSubset& subset) {
    sum += t_exact(SimpleGraph(g.vertex_count(), subset), w, inner);
  });
  return sum / Scalar(mpq_class(subsets));
}

Check moment_identity_check(const SimpleGraph& g, const StepGraphon& w, std::size_t k, double tol,
                            const ComputeOptions& options) {
  const Scalar lhs = average_subgraph_density(g, k, w, options);
  const Scalar rhs = normalized_falling_moment(edge_count_pmf_exact(g, w, options), k);
  return make_check("moment_identity_k" + std::to_string(k), lhs, rhs, tol);
}

Check pendant_lemma_check(const SimpleGraph& f, Vertex attach, const StepGraphon& w, double tol,
                          const ComputeOptions& options) {
  const Scalar variance = degree_variance(w, options);
  if (!within(variance, tol)) {
    throw Error(Errc::HypothesisViolated, "graphon is not regular: degree variance " + variance.str());
  }
  const SimpleGraph extended = pendant_extension(f, attach);
  const Scalar lhs = t_exact(extended, w, options);
  const Scalar rhs = t_exact(path(1), w, options) * t_exact(f, w, options);
  return make_check("pendant_extension", lhs, rhs, tol);
}

QuasirandomResult quasirandom_check(const StepGraphon& w, double tol, const ComputeOptions& options) {
  QuasirandomResult out;
  out.c4_gap = t_exact(cycle(4), w, options) - pow(t_exact(path(1), w, options), 4);
  out.pass = out.c4_gap.is_exact() ? out.c4_gap.is_zero() : out.c4_gap.to_double() <= tol;
  return out;
}

VerifierReport theorem_probe(const SimpleGraph& g, const StepGraphon& w, std::optional<Scalar> p, double tol,
                             const ComputeOptions& options) {
  const Scalar level = p ? *p : t_exact(path(1), w, options);
  const bool has_c4 = contains_c4(g);
  const Scalar tv = total_variation(edge_count_pmf_exact(g, w, options), binomial_pmf(g.edge_count(), level));
  const Scalar deviation = max_deviation(w, level);

  VerifierReport report;
  report.checks.push_back(make_check("contains_c4", Scalar(has_c4 ? 1 : 0), Scalar(1), tol));
  report.checks.push_back(make_check("edge_count_tv", tv, Scalar(0), tol));
  report.checks.push_back(make_check("constant_graphon", deviation, Scalar(0), tol));

  const bool binomial = report.checks[1].pass;
  const bool constant = report.checks[2].pass;
  if (!has_c4) {
    report.verdict = Verdict::NoC4Precondition;
  } else if (!binomial) {
    report.verdict = Verdict::NonbinomialEdgeCounts;
  } else {
    report.verdict = Verdict::ConstantGraphon;
    report.contradiction = !constant;
  }
  return report;
}

VerifierReport lemma_chain_replay(const SimpleGraph& g, const StepGraphon& w, std::optional<Scalar> p, double tol,
                                  const ComputeOptions& options) {
  const Scalar level = p ? *p : t_exact(path(1), w, options);
  if (!contains_c4(g)) throw Error(Errc::HypothesisViolated, "template graph contains no C4");
  const Scalar tv = total_variation(edge_count_pmf_exact(g, w, options), binomial_pmf(g.edge_count(), level));
  if (!within(tv, tol)) {
    throw Error(Errc::HypothesisViolated, "edge-count distribution differs from B(m, p): TV = " + tv.str());
  }

  VerifierReport report;
  auto& checks = report.checks;
  checks.push_back(make_check("P1_density", t_exact(path(1), w, options), level, tol));
  checks.push_back(make_check("S2_density", t_exact(star(2), w, options), pow(level, 2), tol));
  checks.push_back(make_check("degree_variance", degree_variance(w, options), Scalar(0), tol));
  checks.push_back(make_check("degrees_equal_p", max_deviation(degree_vector(w), level), Scalar(0), tol));
  checks.push_back(make_check("P3_density", t_exact(path(3), w, options), pow(level, 3), tol));
  checks.push_back(make_check("S3_density", t_exact(star(3), w, options), pow(level, 3), tol));
  if (contains_triangle(g)) {
    checks.push_back(make_check("K3_density", t_exact(complete(3), w, options), pow(level, 3), tol));
  }
  checks.push_back(make_check("C4_density", t_exact(cycle(4), w, options), pow(level, 4), tol));
  checks.push_back(make_check("c4_forces_constant", max_deviation(w, level), Scalar(0), tol));

  report.verdict = Verdict::ConsistentWithTheorem;
  for (const auto& c : checks) report.contradiction = report.contradiction || !c.pass;
  return report;
}

}  // namespace graphonlab
