#pragma once

// Finite multigraphs, chain groups C0/C1, boundary and its adjoint, and a
// deterministic integral homology basis.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crystnet/exact.hpp"

namespace crystnet {

struct EdgeRecord {
  std::string id;
  std::size_t a = 0;  // origin of the forward orientation
  std::size_t b = 0;  // terminus of the forward orientation
};

/// A forward edge index together with a direction flag; reversed means ē.
struct DirectedEdge {
  std::size_t edge = 0;
  bool reversed = false;

  DirectedEdge inverse() const { return {edge, !reversed}; }
  bool operator==(const DirectedEdge&) const = default;
};

struct GraphOptions {
  bool allow_low_degree = false;
};

class FiniteGraph {
 public:
  /// Validates ids, endpoints, connectivity and (unless relaxed) degree >= 3.
  static FiniteGraph build(std::size_t vertex_count, std::vector<EdgeRecord> edges,
                           GraphOptions options = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const EdgeRecord& edge(std::size_t i) const { return edges_.at(i); }

  std::size_t origin(DirectedEdge e) const { return e.reversed ? edges_[e.edge].b : edges_[e.edge].a; }
  std::size_t terminus(DirectedEdge e) const { return e.reversed ? edges_[e.edge].a : edges_[e.edge].b; }

  /// E_x: directed edges with origin x, in input order (a loop contributes e and ē).
  const std::vector<DirectedEdge>& star(std::size_t x) const { return star_.at(x); }
  std::size_t degree(std::size_t x) const { return star_.at(x).size(); }

  std::optional<std::size_t> find_edge(const std::string& id) const;
  std::size_t betti_number() const { return edges_.size() + 1 - vertex_count_; }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<DirectedEdge>> star_;
};

/// Rational 1-chain over the forward edges E⁰; the value on ē is the negation.
struct Chain1 {
  RatVector coeffs;

  Chain1() = default;
  explicit Chain1(std::size_t edges) : coeffs(edges) {}
  explicit Chain1(RatVector c) : coeffs(std::move(c)) {}

  Rat value(DirectedEdge e) const { return e.reversed ? Rat(-coeffs.at(e.edge)) : coeffs.at(e.edge); }
  void add(DirectedEdge e, const Rat& c) {
    if (e.reversed) coeffs.at(e.edge) -= c;
    else coeffs.at(e.edge) += c;
  }
  bool is_zero() const;
  bool operator==(const Chain1& o) const { return coeffs == o.coeffs; }
};

struct Chain0 {
  RatVector coeffs;

  Chain0() = default;
  explicit Chain0(std::size_t vertices) : coeffs(vertices) {}
  explicit Chain0(RatVector c) : coeffs(std::move(c)) {}

  Rat augmentation() const;
  bool is_zero() const;
  bool operator==(const Chain0& o) const { return coeffs == o.coeffs; }
};

Chain1 edge_chain(const FiniteGraph& g, DirectedEdge e);
Chain0 vertex_chain(const FiniteGraph& g, std::size_t x);
/// Sum of the directed edges of a path; throws InvalidInput if not contiguous.
Chain1 path_chain(const FiniteGraph& g, const std::vector<DirectedEdge>& path);

Chain0 boundary(const FiniteGraph& g, const Chain1& c);
Chain1 coboundary_adjoint(const FiniteGraph& g, const Chain0& a);
Rat inner(const Chain1& a, const Chain1& b);
Rat inner(const Chain0& a, const Chain0& b);

/// V×E matrix of the boundary map.
IntMatrix incidence_matrix(const FiniteGraph& g);
/// Graph Laplacian ∂∂*; loops contribute nothing.
IntMatrix laplacian(const FiniteGraph& g);

struct HomologyBasis {
  /// Tree edges in BFS discovery order.
  std::vector<std::size_t> tree_edges;
  /// Non-tree forward edges in input order; cycle i runs through cotree_edges[i].
  std::vector<std::size_t> cotree_edges;
  /// For each vertex, the directed tree edge from its parent (none for the root).
  std::vector<std::optional<DirectedEdge>> parent;
  std::vector<std::size_t> parent_vertex;
  std::vector<std::size_t> bfs_order;
  std::vector<Chain1> cycles;
  IntMatrix gram;
  std::size_t edge_count = 0;

  std::size_t rank() const { return cycles.size(); }
  /// E×b integer matrix whose columns are the cycles.
  IntMatrix cycle_matrix() const;
  /// Directed tree path from the root to x, as a list of directed edges.
  std::vector<DirectedEdge> root_path(std::size_t x) const;
};

HomologyBasis homology_basis(const FiniteGraph& g);

/// Tree path from `from` to `to` as a directed-edge list.
std::vector<DirectedEdge> tree_path(const HomologyBasis& basis, std::size_t from, std::size_t to);

/// Integer 1-chain c with ∂c = divisor (which must have augmentation 0),
/// supported on the spanning tree.
IntVector tree_lift(const FiniteGraph& g, const HomologyBasis& basis, const IntVector& divisor);

/// Coordinates of an integral cycle in the homology basis (read off the
/// cotree coefficients); throws InvalidInput if c is not a cycle.
IntVector cycle_coordinates(const FiniteGraph& g, const HomologyBasis& basis, const Chain1& c);

}  // namespace crystnet
