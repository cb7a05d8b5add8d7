#pragma once

#include <cstddef>
#include <compare>
#include <span>
#include <vector>

namespace graphonlab {

using Vertex = std::size_t;

/// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph on vertices {0, ..., n-1}. The edge list is kept
/// sorted lexicographically, so two graphs with the same edge set compare
/// equal and serialize identically.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Normalizes each pair to (min, max) and sorts. Throws Error(InvalidGraph)
  /// on loops, duplicate edges or endpoints >= n.
  SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  std::vector<std::vector<Vertex>> adjacency() const;

  /// Same vertex set, edges restricted to `subset` (which must be edges of this graph).
  SimpleGraph edge_subgraph(std::span<const Edge> subset) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace graphonlab
