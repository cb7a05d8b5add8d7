#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "graphonlab/detail/parallel.hpp"
#include "graphonlab/error.hpp"
#include "graphonlab/graph.hpp"
#include "graphonlab/options.hpp"

namespace graphonlab::detail {

/// Throws Error(TooLarge) when `evaluations` exceeds the configured limit.
inline void check_guardrail(long double evaluations, const ComputeOptions& options, const char* what) {
  if (options.force) return;
  if (evaluations > static_cast<long double>(options.limit)) {
    throw Error(Errc::TooLarge, std::string(what) + " needs ~" + std::to_string(static_cast<double>(evaluations)) +
                                    " assignment evaluations, limit is " + std::to_string(options.limit) +
                                    " (use force to override)");
  }
}

inline long double assignment_count(std::size_t q, std::size_t n) {
  return std::pow(static_cast<long double>(q), static_cast<long double>(n));
}

/// Back-neighbours of v: edges {u, v} of G with u < v, in the order they
/// appear in the sorted edge list. Each edge is reported exactly once.
struct BackEdge {
  Vertex other;
  std::size_t edge_index;
};

inline std::vector<std::vector<BackEdge>> back_edges(const SimpleGraph& g) {
  std::vector<std::vector<BackEdge>> back(g.vertex_count());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) back[edges[i].v].push_back({edges[i].u, i});
  return back;
}

/// Assignments are split into tasks by the parts of the first few vertices.
/// The split depends only on (q, n), never on the worker count, so any
/// reduction performed in task order is reproducible bit-for-bit.
struct TaskSplit {
  std::size_t prefix_depth = 0;
  std::size_t task_count = 1;
};

inline TaskSplit split_tasks(std::size_t q, std::size_t n) {
  constexpr std::size_t kTargetTasks = 64;
  TaskSplit split;
  while (split.prefix_depth < n && split.task_count < kTargetTasks) {
    split.task_count *= q;
    ++split.prefix_depth;
  }
  return split;
}

/// Depth-first enumeration of all maps V -> {0..q-1}.
///
/// step(parent, v, part, phi, child) builds the state after assigning
/// `part` to vertex v (phi holds the parts of vertices < v) and returns
/// false to prune the subtree. leaf(task, state) is called for every
/// complete assignment; it may only touch per-task storage.
template <class State, class Step, class Leaf>
void enumerate_assignments(std::size_t n, std::size_t q, unsigned threads, const State& root, Step&& step,
                           Leaf&& leaf) {
  const TaskSplit split = split_tasks(q, n);
  if (n == 0) {
    leaf(std::size_t{0}, root);
    return;
  }
  parallel_for(split.task_count, threads, [&](std::size_t task) {
    std::vector<std::size_t> phi(n, 0);
    std::vector<State> stack(n + 1, root);
    std::size_t code = task;
    for (std::size_t v = split.prefix_depth; v-- > 0;) {
      phi[v] = code % q;
      code /= q;
    }
    for (std::size_t v = 0; v < split.prefix_depth; ++v) {
      if (!step(stack[v], v, phi[v], phi, stack[v + 1])) return;
    }
    if (split.prefix_depth == n) {
      leaf(task, stack[n]);
      return;
    }
    // Iterative DFS over the remaining vertices.
    std::size_t v = split.prefix_depth;
    std::vector<std::size_t> next(n + 1, 0);
    next[v] = 0;
    while (true) {
      if (next[v] == q) {
        if (v == split.prefix_depth) break;
        --v;
        continue;
      }
      const std::size_t part = next[v]++;
      phi[v] = part;
      if (!step(stack[v], v, part, phi, stack[v + 1])) continue;
      if (v + 1 == n) {
        leaf(task, stack[n]);
      } else {
        ++v;
        next[v] = 0;
      }
    }
  });
}

}  // namespace graphonlab::detail
