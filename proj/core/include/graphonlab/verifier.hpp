#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"
#include "graphonlab/options.hpp"
#include "graphonlab/scalar.hpp"

namespace graphonlab {

/// Default tolerance for comparisons on the floating path. The exact path
/// always demands literal equality.
inline constexpr double kDefaultTolerance = 1e-10;

struct Check {
  std::string name;
  Scalar lhs;
  Scalar rhs;
  Scalar gap;  // |lhs - rhs|
  bool pass = false;
};

/// pass is gap == 0 when both sides are exact, gap <= tol otherwise.
Check make_check(std::string name, const Scalar& lhs, const Scalar& rhs, double tol);

enum class Verdict { ConsistentWithTheorem, ConstantGraphon, NonbinomialEdgeCounts, NoC4Precondition };

std::string_view to_string(Verdict v);

struct VerifierReport {
  std::vector<Check> checks;
  Verdict verdict = Verdict::ConsistentWithTheorem;
  /// Set when equal edge-count distributions coexist with a non-constant
  /// graphon, or a replayed density identity fails under its hypothesis. Either means a bug.
  bool contradiction = false;
};

/// deg_i = sum_j mu_j W_ij.
std::vector<Scalar> degree_vector(const StepGraphon& w);

/// t(S2, W) - t(P1, W)^2, the variance of the degree function.
Scalar degree_variance(const StepGraphon& w, const ComputeOptions& options = {});

/// Mean of t((V(G), F), W) over all k-edge subsets F of E(G).
/// Errors: BadK, TooLarge (guardrail on C(m,k) * q^n).
Scalar average_subgraph_density(const SimpleGraph& g, std::size_t k, const StepGraphon& w,
                                const ComputeOptions& options = {});

/// average_subgraph_density(G, k, W) against the normalized k-th falling
/// moment of N(G, W). Holds for every W.
Check moment_identity_check(const SimpleGraph& g, const StepGraphon& w, std::size_t k,
                            double tol = kDefaultTolerance, const ComputeOptions& options = {});

/// t(F + pendant at w, W) against t(P1, W) * t(F, W). Requires a regular
/// W (degree_variance zero, or <= tol on the floating path); otherwise
/// throws Error(HypothesisViolated).
Check pendant_lemma_check(const SimpleGraph& f, Vertex attach, const StepGraphon& w,
                          double tol = kDefaultTolerance, const ComputeOptions& options = {});

struct QuasirandomResult {
  Scalar c4_gap;  // t(C4, W) - t(P1, W)^4, signed
  bool pass = false;
};

QuasirandomResult quasirandom_check(const StepGraphon& w, double tol = kDefaultTolerance,
                                    const ComputeOptions& options = {});

/// Gate on containing C4, distance of N(G, W) to B(m, p), and constancy of
/// W. p defaults to t(P1, W).
VerifierReport theorem_probe(const SimpleGraph& g, const StepGraphon& w, std::optional<Scalar> p = std::nullopt,
                             double tol = kDefaultTolerance, const ComputeOptions& options = {});

/// Replays the density identities that follow from N(G, W) = B(m, p), in
/// order: P1, S2, degrees, P3, S3, K3 (only if G has a triangle), C4, and
/// finally constancy of W. Requires G to contain a C4 and the edge-count
/// distributions to agree; otherwise throws Error(HypothesisViolated).
VerifierReport lemma_chain_replay(const SimpleGraph& g, const StepGraphon& w, std::optional<Scalar> p = std::nullopt,
                                  double tol = kDefaultTolerance, const ComputeOptions& options = {});

}  // namespace graphonlab
