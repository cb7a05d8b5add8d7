#include "graphonlab/catalog.hpp"

#include <charconv>
#include <string>

#include "graphonlab/error.hpp"

namespace graphonlab {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::BadSize, what);
}

}  // namespace

SimpleGraph star(std::size_t k) {
  require(k >= 1, "star needs k >= 1");
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= k; ++leaf) edges.push_back({0, leaf});
  return SimpleGraph(k + 1, std::move(edges));
}

SimpleGraph path(std::size_t k) {
  require(k >= 1, "path needs k >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < k; ++v) edges.push_back({v, v + 1});
  return SimpleGraph(k + 1, std::move(edges));
}

SimpleGraph cycle(std::size_t k) {
  require(k >= 3, "cycle needs k >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < k; ++v) edges.push_back({v, (v + 1) % k});
  return SimpleGraph(k, std::move(edges));
}

SimpleGraph complete(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph independent_edges(std::size_t k) {
  require(k >= 1, "independent edges need k >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) edges.push_back({2 * i, 2 * i + 1});
  return SimpleGraph(2 * k, std::move(edges));
}

SimpleGraph empty_graph(std::size_t n) { return SimpleGraph(n, {}); }

SimpleGraph disjoint_union(const SimpleGraph& f1, const SimpleGraph& f2) {
  const std::size_t shift = f1.vertex_count();
  std::vector<Edge> edges(f1.edges().begin(), f1.edges().end());
  for (const auto& e : f2.edges()) edges.push_back({e.u + shift, e.v + shift});
  return SimpleGraph(shift + f2.vertex_count(), std::move(edges));
}

SimpleGraph pendant_extension(const SimpleGraph& f, Vertex w) {
  if (w >= f.vertex_count()) throw Error(Errc::BadVertex, "attachment vertex " + std::to_string(w) + " out of range");
  std::vector<Edge> edges(f.edges().begin(), f.edges().end());
  const Vertex fresh = f.vertex_count();
  edges.push_back({w, fresh});
  return SimpleGraph(fresh + 1, std::move(edges));
}

std::vector<EdgeSubset> k_edge_subgraphs(const SimpleGraph& g, std::size_t k) {
  std::vector<EdgeSubset> out;
  for_each_k_edge_subset(g, k, [&](const EdgeSubset& s) { out.push_back(s); });
  return out;
}

bool contains_c4(const SimpleGraph& g) {
  // Two distinct common neighbours x, y of a pair {a, b} close the cycle a-x-b-y.
  const auto adj = g.adjacency();
  const std::size_t n = g.vertex_count();
  std::vector<unsigned char> common(n * n, 0);
  for (Vertex x = 0; x < n; ++x) {
    const auto& nb = adj[x];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const std::size_t slot = std::min(nb[i], nb[j]) * n + std::max(nb[i], nb[j]);
        if (++common[slot] >= 2) return true;
      }
    }
  }
  return false;
}

bool contains_triangle(const SimpleGraph& g) {
  for (const auto& e : g.edges()) {
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (w != e.u && w != e.v && g.has_edge(e.u, w) && g.has_edge(e.v, w)) return true;
    }
  }
  return false;
}

SimpleGraph builtin_graph(std::string_view name) {
  auto parse_size = [&](std::string_view digits) {
    std::size_t k = 0;
    const auto* end = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(digits.data(), end, k);
    if (digits.empty() || ec != std::errc() || ptr != end) {
      throw Error(Errc::ParseError, "unknown builtin graph '" + std::string(name) + "'");
    }
    return k;
  };
  constexpr std::string_view kIndependent = "mxP1:";
  if (name.starts_with(kIndependent)) return independent_edges(parse_size(name.substr(kIndependent.size())));
  if (name.size() >= 2) {
    const std::size_t k = parse_size(name.substr(1));
    switch (name.front()) {
      case 'P': return path(k);
      case 'S': return star(k);
      case 'C': return cycle(k);
      case 'K': return complete(k);
      default: break;
    }
  }
  throw Error(Errc::ParseError, "unknown builtin graph '" + std::string(name) + "'");
}

}  // namespace graphonlab
