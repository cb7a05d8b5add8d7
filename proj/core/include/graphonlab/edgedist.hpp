#pragma once

#include <cstddef>
#include <span>

#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"
#include "graphonlab/options.hpp"
#include "graphonlab/pmf.hpp"
#include "graphonlab/scalar.hpp"

namespace graphonlab {

/// Distribution of the number of edges kept when S is sampled from W.
///
/// For each part assignment phi, the edge indicators are independent
/// Bernoulli(W_phi(i)phi(j)), so their count has generating polynomial
/// prod_e ((1 - W_e) + W_e z). The weighted sum of those polynomials over
/// all q^n assignments is the pmf. Cost O(q^n m^2).
/// Errors: TooLarge.
EdgeCountPMF edge_count_pmf_exact(const SimpleGraph& s, const StepGraphon& w, const ComputeOptions& options = {});

/// Probability that sampling S from W keeps exactly the labelled edge set
/// `kept`. Errors: NotASubset, TooLarge.
Scalar subgraph_probability(const SimpleGraph& s, const StepGraphon& w, std::span<const Edge> kept,
                            const ComputeOptions& options = {});

/// B(m, p). Errors: ValueOutOfRange unless 0 <= p <= 1.
EdgeCountPMF binomial_pmf(std::size_t m, const Scalar& p);

/// Half the L1 distance. Errors: LengthMismatch.
Scalar total_variation(const EdgeCountPMF& a, const EdgeCountPMF& b);

/// E[C(I, k)] / C(m, k) for I distributed as pmf. Errors: BadK if k > m.
Scalar normalized_falling_moment(const EdgeCountPMF& pmf, std::size_t k);

/// C(n, k) as an exact integer.
mpz_class binomial_coefficient(std::size_t n, std::size_t k);

}  // namespace graphonlab
