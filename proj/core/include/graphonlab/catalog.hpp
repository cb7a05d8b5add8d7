#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "graphonlab/graph.hpp"

namespace graphonlab {

/// Star with k edges: center 0, leaves 1..k. Errors: BadSize if k < 1.
SimpleGraph star(std::size_t k);
/// Path with k edges on k+1 vertices. Errors: BadSize if k < 1.
SimpleGraph path(std::size_t k);
/// Cycle with k edges on k vertices. Errors: BadSize if k < 3.
SimpleGraph cycle(std::size_t k);
/// Errors: BadSize if n < 1.
SimpleGraph complete(std::size_t n);
/// k vertex-disjoint edges. Errors: BadSize if k < 1.
SimpleGraph independent_edges(std::size_t k);
/// Graph with n vertices and no edges.
SimpleGraph empty_graph(std::size_t n);

/// F2's vertices are shifted by |V(F1)|.
SimpleGraph disjoint_union(const SimpleGraph& f1, const SimpleGraph& f2);

/// Adds vertex |V(F)| joined only to w. Errors: BadVertex.
SimpleGraph pendant_extension(const SimpleGraph& f, Vertex w);

using EdgeSubset = std::vector<Edge>;

/// Calls visit(subset) for every k-subset of E(G), in lexicographic order
/// of index sets over the sorted edge list. Errors: BadK if k > m.
template <class Visitor>
void for_each_k_edge_subset(const SimpleGraph& g, std::size_t k, Visitor&& visit);

/// All C(m, k) k-subsets of E(G), each exactly once. Errors: BadK.
std::vector<EdgeSubset> k_edge_subgraphs(const SimpleGraph& g, std::size_t k);

/// True iff G contains a 4-cycle as a (not necessarily induced) subgraph,
/// i.e. some pair of vertices has at least two common neighbours.
bool contains_c4(const SimpleGraph& g);
bool contains_triangle(const SimpleGraph& g);

/// Builtin template names: P<k>, S<k>, C<k>, K<n>, mxP1:<k>.
/// Errors: ParseError for an unknown name, BadSize from the builders.
SimpleGraph builtin_graph(std::string_view name);

}  // namespace graphonlab

#include "graphonlab/detail/subsets.hpp"
