#pragma once

// Named example graphs and seeded random graphs.

#include <cstdint>
#include <string>
#include <vector>

#include "crystnet/graph.hpp"

namespace crystnet {

FiniteGraph complete_graph(std::size_t n, GraphOptions options = {});
/// Δ_m: two vertices joined by m parallel edges oriented 0 -> 1.
FiniteGraph dipole(std::size_t m, GraphOptions options = {});
/// One vertex carrying n loops.
FiniteGraph bouquet(std::size_t n);
/// K4 with edges e1, e2, e3 from a centre vertex 0 and f1, f2, f3 on the
/// outer triangle, oriented so that (e2, f1, ē3), (e3, f2, ē1), (e1, f3, ē2)
/// and (f̄1, f̄2, f̄3) are closed paths.
FiniteGraph k4_labelled();
/// Quotient of the kagome net: a triangle with doubled sides.
FiniteGraph kagome_quotient();
/// Quotient of the dice net: two degree-3 vertices joined to one hub by
/// three edges each.
FiniteGraph dice_quotient();

/// Connected multigraph on 2..max_vertices vertices, all degrees >= 3.
FiniteGraph random_graph(std::uint64_t seed, std::size_t max_vertices = 8);

struct NamedGraph {
  std::string name;
  FiniteGraph graph;
};

/// The fixed example corpus used by the verification suites.
std::vector<NamedGraph> example_corpus();

}  // namespace crystnet
