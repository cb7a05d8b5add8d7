#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace graphonlab;

namespace {

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (const auto& e : a.edges()) ok = ok && b.has_edge(perm[e.u], perm[e.v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("named graphs") {
  const auto p1 = path(1);
  CHECK(p1.vertex_count() == 2);
  CHECK(p1.edge_count() == 1);

  const auto c4 = cycle(4);
  CHECK(c4.vertex_count() == 4);
  const std::vector<Edge> expected{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  CHECK(std::equal(c4.edges().begin(), c4.edges().end(), expected.begin(), expected.end()));

  CHECK(complete(4).edge_count() == 6);
  CHECK(complete(1).edge_count() == 0);
  CHECK(star(5).vertex_count() == 6);
  CHECK(path(3).vertex_count() == 4);
  CHECK(isomorphic(path(2), star(2)));
  CHECK_FALSE(isomorphic(path(3), star(3)));

  CHECK_THROWS_AS(cycle(2), Error);
  CHECK_THROWS_AS(path(0), Error);
  CHECK_THROWS_AS(star(0), Error);
  CHECK_THROWS_AS(complete(0), Error);
}

TEST_CASE("SimpleGraph rejects malformed edge lists") {
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 3}}), Error);
  const SimpleGraph g(3, {{2, 1}, {1, 0}});
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{1, 2});
}

TEST_CASE("disjoint_union") {
  const auto two = disjoint_union(path(1), path(1));
  CHECK(two.vertex_count() == 4);
  CHECK(two == independent_edges(2));
  CHECK(disjoint_union(cycle(4), empty_graph(0)) == cycle(4));
  CHECK(disjoint_union(empty_graph(0), cycle(4)) == cycle(4));
}

TEST_CASE("pendant_extension") {
  CHECK(pendant_extension(path(2), 2) == path(3));
  CHECK(isomorphic(pendant_extension(path(2), 0), path(3)));
  CHECK(isomorphic(pendant_extension(path(2), 1), star(3)));
  CHECK(pendant_extension(empty_graph(1), 0) == path(1));
  try {
    pendant_extension(path(2), 3);
    FAIL("expected BadVertex");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadVertex);
  }
}

TEST_CASE("k_edge_subgraphs of C4") {
  const auto c4 = cycle(4);
  const auto subsets = k_edge_subgraphs(c4, 2);
  REQUIRE(subsets.size() == 6);
  int adjacent = 0;
  int opposite = 0;
  for (const auto& s : subsets) {
    const auto g = c4.edge_subgraph(s);
    CHECK(g.vertex_count() == 4);
    if (isomorphic(g, disjoint_union(path(2), empty_graph(1)))) ++adjacent;
    if (isomorphic(g, independent_edges(2))) ++opposite;
  }
  CHECK(adjacent == 4);
  CHECK(opposite == 2);

  CHECK(k_edge_subgraphs(c4, 0).size() == 1);
  CHECK(k_edge_subgraphs(c4, 0).front().empty());
  const auto all = k_edge_subgraphs(c4, 4);
  REQUIRE(all.size() == 1);
  CHECK(std::equal(all[0].begin(), all[0].end(), c4.edges().begin(), c4.edges().end()));
  CHECK_THROWS_AS(k_edge_subgraphs(c4, 5), Error);
}

TEST_CASE("k_edge_subgraphs enumerates each subset once, lexicographically") {
  for (const auto& g : {path(1), star(3), cycle(5), complete(4), independent_edges(4), path(8)}) {
    const std::size_t m = g.edge_count();
    REQUIRE(m <= 8);
    for (std::size_t k = 0; k <= m; ++k) {
      const auto subsets = k_edge_subgraphs(g, k);
      CHECK(mpz_class(subsets.size()) == testing::oracle::choose(m, k));
      std::set<EdgeSubset> unique(subsets.begin(), subsets.end());
      CHECK(unique.size() == subsets.size());
      CHECK(std::is_sorted(subsets.begin(), subsets.end()));
      for (const auto& s : subsets) CHECK(s.size() == k);
    }
  }
}

TEST_CASE("contains_c4 examples") {
  CHECK(contains_c4(cycle(4)));
  CHECK(contains_c4(complete(4)));
  CHECK_FALSE(contains_c4(complete(3)));
  CHECK_FALSE(contains_c4(star(5)));
  CHECK_FALSE(contains_c4(cycle(5)));
  CHECK(contains_c4(disjoint_union(path(2), cycle(4))));
}

TEST_CASE("contains_c4 agrees with brute force on every graph with n <= 6") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& g : testing::all_graphs(n)) {
      REQUIRE(contains_c4(g) == testing::oracle::has_c4(g));
    }
  }
}

TEST_CASE("contains_c4 agrees with brute force on every graph with n = 7") {
  // Bitmask adjacency keeps the 2^21-graph sweep fast.
  constexpr std::size_t n = 7;
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::size_t mismatches = 0;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    std::array<std::uint8_t, n> adj{};
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1U) {
        adj[pairs[i].u] |= static_cast<std::uint8_t>(1U << pairs[i].v);
        adj[pairs[i].v] |= static_cast<std::uint8_t>(1U << pairs[i].u);
        edges.push_back(pairs[i]);
      }
    }
    auto edge = [&](Vertex x, Vertex y) { return (adj[x] >> y & 1U) != 0; };
    bool brute = false;
    for (Vertex a = 0; a < n && !brute; ++a)
      for (Vertex b = 0; b < n && !brute; ++b)
        for (Vertex c = 0; c < n && !brute; ++c)
          for (Vertex d = 0; d < n && !brute; ++d) {
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            brute = edge(a, b) && edge(b, c) && edge(c, d) && edge(d, a);
          }
    if (contains_c4(SimpleGraph(n, std::move(edges))) != brute) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("contains_triangle") {
  CHECK(contains_triangle(complete(3)));
  CHECK_FALSE(contains_triangle(cycle(4)));
  CHECK(contains_triangle(complete(4)));
}

TEST_CASE("builtin_graph names") {
  CHECK(builtin_graph("P1") == path(1));
  CHECK(builtin_graph("S3") == star(3));
  CHECK(builtin_graph("C6") == cycle(6));
  CHECK(builtin_graph("K5") == complete(5));
  CHECK(builtin_graph("mxP1:3") == independent_edges(3));
  CHECK_THROWS_AS(builtin_graph("Q3"), Error);
  CHECK_THROWS_AS(builtin_graph("P"), Error);
  CHECK_THROWS_AS(builtin_graph("C2"), Error);
}
