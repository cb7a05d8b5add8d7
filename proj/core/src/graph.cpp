#include "graphonlab/graph.hpp"

#include <algorithm>
#include <string>

#include "graphonlab/error.hpp"

namespace graphonlab {

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) throw Error(Errc::InvalidGraph, "loop at vertex " + std::to_string(e.u));
    if (e.u >= n_ || e.v >= n_) {
      throw Error(Errc::InvalidGraph, "edge endpoint out of range for n=" + std::to_string(n_));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(Errc::InvalidGraph, "duplicate edge");
  }
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<std::vector<Vertex>> SimpleGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

SimpleGraph SimpleGraph::edge_subgraph(std::span<const Edge> subset) const {
  std::vector<Edge> kept(subset.begin(), subset.end());
  for (auto& e : kept) {
    if (!has_edge(e.u, e.v)) throw Error(Errc::NotASubset, "edge is not in the template graph");
  }
  return SimpleGraph(n_, std::move(kept));
}

}  // namespace graphonlab
