#include "crystnet/corpus.hpp"

#include <random>

namespace crystnet {

FiniteGraph complete_graph(std::size_t n, GraphOptions options) {
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.push_back({"e" + std::to_string(i) + "_" + std::to_string(j), i, j});
  return FiniteGraph::build(n, edges, options);
}

FiniteGraph dipole(std::size_t m, GraphOptions options) {
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 1; i <= m; ++i) edges.push_back({"e" + std::to_string(i), 0, 1});
  return FiniteGraph::build(2, edges, options);
}

FiniteGraph bouquet(std::size_t n) {
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 1; i <= n; ++i) edges.push_back({"l" + std::to_string(i), 0, 0});
  return FiniteGraph::build(1, edges, {n < 2});
}

FiniteGraph k4_labelled() {
  return FiniteGraph::build(4, {{"e1", 0, 1}, {"e2", 0, 2}, {"e3", 0, 3},
                                {"f1", 2, 3}, {"f2", 3, 1}, {"f3", 1, 2}});
}

FiniteGraph kagome_quotient() {
  // vertices A=0, B=1, C=2
  return FiniteGraph::build(3, {{"k1", 0, 1}, {"k2", 1, 2}, {"k3", 2, 0},
                                {"k4", 1, 0}, {"k5", 2, 1}, {"k6", 0, 2}});
}

FiniteGraph dice_quotient() {
  // degree-3 vertices P=0, Q=1, hub R=2
  return FiniteGraph::build(3, {{"d1", 0, 2}, {"d2", 0, 2}, {"d3", 0, 2},
                                {"d4", 1, 2}, {"d5", 1, 2}, {"d6", 1, 2}});
}

FiniteGraph random_graph(std::uint64_t seed, std::size_t max_vertices) {
  std::mt19937_64 rng(seed);
  if (max_vertices < 2) max_vertices = 2;
  const std::size_t n = 2 + rng() % (max_vertices - 1);
  std::vector<EdgeRecord> edges;
  std::vector<std::size_t> deg(n, 0);
  auto add = [&](std::size_t a, std::size_t b) {
    edges.push_back({"r" + std::to_string(edges.size()), a, b});
    deg[a] += 1;
    deg[b] += 1;
  };
  for (std::size_t i = 1; i < n; ++i) add(rng() % i, i);
  while (true) {
    std::size_t low = n;
    for (std::size_t i = 0; i < n; ++i)
      if (deg[i] < 3) {
        low = i;
        break;
      }
    if (low == n) break;
    // mostly ordinary edges, occasionally a loop
    std::size_t other = rng() % n;
    if (other == low && rng() % 4 != 0) other = (low + 1 + rng() % (n - 1)) % n;
    if (rng() % 2) add(low, other);
    else add(other, low);
  }
  return FiniteGraph::build(n, edges);
}

std::vector<NamedGraph> example_corpus() {
  return {
      {"k4", k4_labelled()},
      {"k5", complete_graph(5)},
      {"theta", dipole(3)},
      {"delta4", dipole(4)},
      {"delta5", dipole(5)},
      {"bouquet3", bouquet(3)},
      {"kagome", kagome_quotient()},
      {"dice", dice_quotient()},
  };
}

}  // namespace crystnet
