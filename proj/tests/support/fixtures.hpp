#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "graphonlab/graphonlab.hpp"

namespace graphonlab::testing {

inline Scalar q(long num, long den = 1) { return Scalar::rational(num, den); }

/// mu = (1/2, 1/2), values [[1,0],[0,1]].
inline StepGraphon two_block() {
  return validate_graphon({q(1, 2), q(1, 2)}, {{q(1), q(0)}, {q(0), q(1)}});
}

/// mu = (1/2, 1/2), values [[1,0],[0,0]].
inline StepGraphon corner_block() {
  return validate_graphon({q(1, 2), q(1, 2)}, {{q(1), q(0)}, {q(0), q(0)}});
}

/// mu = (1/2, 1/2), values [[a,b],[b,a]]; every degree is (a+b)/2.
inline StepGraphon symmetric_two_block(const Scalar& a, const Scalar& b) {
  return validate_graphon({q(1, 2), q(1, 2)}, {{a, b}, {b, a}});
}

/// A lopsided three-part graphon used for golden values.
inline StepGraphon three_part() {
  return validate_graphon({q(1, 6), q(1, 3), q(1, 2)},
                          {{q(1, 2), q(1, 3), q(0)}, {q(1, 3), q(1), q(3, 4)}, {q(0), q(3, 4), q(1, 5)}});
}

/// Seeded random rational step graphon with `parts` parts. Measures are
/// random positive integers normalized; values are k/d with d in 1..6.
inline StepGraphon random_rational_graphon(std::uint64_t seed, std::size_t parts) {
  std::mt19937_64 rng(seed);
  std::vector<long> weights(parts);
  long total = 0;
  for (auto& w : weights) {
    w = 1 + static_cast<long>(rng() % 5);
    total += w;
  }
  std::vector<Scalar> mu;
  for (long w : weights) mu.push_back(q(w, total));
  std::vector<std::vector<Scalar>> values(parts, std::vector<Scalar>(parts));
  for (std::size_t i = 0; i < parts; ++i) {
    for (std::size_t j = i; j < parts; ++j) {
      const long den = 1 + static_cast<long>(rng() % 6);
      const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(den + 1));
      values[i][j] = values[j][i] = q(num, den);
    }
  }
  return validate_graphon(std::move(mu), std::move(values));
}

/// Every simple graph on n vertices (edge sets enumerated by bitmask).
inline std::vector<SimpleGraph> all_graphs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::vector<SimpleGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1U) edges.push_back(pairs[i]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

/// Small named corpus shared by the invariance tests.
inline std::vector<SimpleGraph> golden_templates() {
  return {path(1), path(2), path(3), star(3), complete(3), cycle(4), complete(4), independent_edges(2),
          disjoint_union(complete(3), path(1))};
}

inline std::vector<StepGraphon> golden_graphons() {
  return {constant_graphon(q(1, 2)), constant_graphon(q(1, 3)), two_block(), corner_block(), three_part()};
}

}  // namespace graphonlab::testing

namespace graphonlab::testing {

/// One representative per isomorphism class of graphs on n vertices.
inline std::vector<SimpleGraph> nonisomorphic_graphs(std::size_t n) {
  std::vector<SimpleGraph> reps;
  std::vector<std::vector<Edge>> seen;  // canonical (minimal) relabelled edge lists
  for (const auto& g : all_graphs(n)) {
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::vector<Edge> best;
    bool first = true;
    do {
      std::vector<Edge> relabelled;
      for (const auto& e : g.edges()) {
        Vertex a = perm[e.u];
        Vertex b = perm[e.v];
        if (a > b) std::swap(a, b);
        relabelled.push_back({a, b});
      }
      std::sort(relabelled.begin(), relabelled.end());
      if (first || relabelled < best) best = relabelled;
      first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (std::find(seen.begin(), seen.end(), best) == seen.end()) {
      seen.push_back(best);
      reps.push_back(g);
    }
  }
  return reps;
}

}  // namespace graphonlab::testing
