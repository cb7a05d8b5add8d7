#pragma once

#include <numeric>
#include <string>

#include "graphonlab/error.hpp"

namespace graphonlab {

template <class Visitor>
void for_each_k_edge_subset(const SimpleGraph& g, std::size_t k, Visitor&& visit) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  if (k > m) {
    throw Error(Errc::BadK, "k=" + std::to_string(k) + " exceeds edge count " + std::to_string(m));
  }
  std::vector<std::size_t> index(k);
  std::iota(index.begin(), index.end(), std::size_t{0});
  EdgeSubset subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = edges[index[i]];
    visit(static_cast<const EdgeSubset&>(subset));
    // Advance to the next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && index[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++index[i - 1];
    for (std::size_t j = i; j < k; ++j) index[j] = index[j - 1] + 1;
  }
}

}  // namespace graphonlab
