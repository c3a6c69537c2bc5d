#include "crystnet/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace crystnet {

FiniteGraph FiniteGraph::build(std::size_t vertex_count, std::vector<EdgeRecord> edges,
                               GraphOptions options) {
  if (vertex_count == 0) throw Error(ErrorCode::InvalidInput, "graph needs at least one vertex");
  std::set<std::string> ids;
  for (const auto& e : edges) {
    if (e.id.empty()) throw Error(ErrorCode::InvalidInput, "empty edge id");
    if (!ids.insert(e.id).second) throw Error(ErrorCode::DuplicateEdgeId, "edge id '" + e.id + "'");
    if (e.a >= vertex_count || e.b >= vertex_count)
      throw Error(ErrorCode::BadEndpoint, "edge '" + e.id + "' has an endpoint outside [0, " +
                                              std::to_string(vertex_count) + ")");
  }
  FiniteGraph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  g.star_.assign(vertex_count, {});
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    g.star_[g.edges_[i].a].push_back({i, false});
    g.star_[g.edges_[i].b].push_back({i, true});
  }

  std::vector<bool> seen(vertex_count, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (auto de : g.star_[x]) {
      std::size_t y = g.terminus(de);
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  if (reached != vertex_count) {
    std::size_t v = static_cast<std::size_t>(std::find(seen.begin(), seen.end(), false) - seen.begin());
    throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(v) + " is not reachable from vertex 0");
  }
  if (!options.allow_low_degree) {
    for (std::size_t x = 0; x < vertex_count; ++x)
      if (g.star_[x].size() < 3)
        throw Error(ErrorCode::DegreeTooLow, "vertex " + std::to_string(x) + " has degree " +
                                                 std::to_string(g.star_[x].size()));
  }
  return g;
}

std::optional<std::size_t> FiniteGraph::find_edge(const std::string& id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  return std::nullopt;
}

bool Chain1::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& x) { return x == 0; });
}

Rat Chain0::augmentation() const {
  Rat s = 0;
  for (const auto& x : coeffs) s += x;
  return s;
}

bool Chain0::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& x) { return x == 0; });
}

Chain1 edge_chain(const FiniteGraph& g, DirectedEdge e) {
  Chain1 c(g.edge_count());
  c.add(e, 1);
  return c;
}

Chain0 vertex_chain(const FiniteGraph& g, std::size_t x) {
  if (x >= g.vertex_count()) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(x));
  Chain0 c(g.vertex_count());
  c.coeffs[x] = 1;
  return c;
}

Chain1 path_chain(const FiniteGraph& g, const std::vector<DirectedEdge>& path) {
  Chain1 c(g.edge_count());
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k].edge >= g.edge_count()) throw Error(ErrorCode::InvalidInput, "path edge out of range");
    if (k > 0 && g.terminus(path[k - 1]) != g.origin(path[k]))
      throw Error(ErrorCode::InvalidInput, "path is not contiguous at step " + std::to_string(k));
    c.add(path[k], 1);
  }
  return c;
}

Chain0 boundary(const FiniteGraph& g, const Chain1& c) {
  if (c.coeffs.size() != g.edge_count()) throw Error(ErrorCode::DimensionMismatch, "1-chain size");
  Chain0 out(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    out.coeffs[e.b] += c.coeffs[i];
    out.coeffs[e.a] -= c.coeffs[i];
  }
  return out;
}

Chain1 coboundary_adjoint(const FiniteGraph& g, const Chain0& a) {
  if (a.coeffs.size() != g.vertex_count()) throw Error(ErrorCode::DimensionMismatch, "0-chain size");
  Chain1 out(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    out.coeffs[i] = a.coeffs[e.b] - a.coeffs[e.a];
  }
  return out;
}

Rat inner(const Chain1& a, const Chain1& b) { return dot(a.coeffs, b.coeffs); }
Rat inner(const Chain0& a, const Chain0& b) { return dot(a.coeffs, b.coeffs); }

IntMatrix incidence_matrix(const FiniteGraph& g) {
  IntMatrix m(g.vertex_count(), g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    m(e.b, i) += 1;
    m(e.a, i) -= 1;
  }
  return m;
}

IntMatrix laplacian(const FiniteGraph& g) {
  IntMatrix b = incidence_matrix(g);
  return b * b.transpose();
}

IntMatrix HomologyBasis::cycle_matrix() const {
  const std::size_t e = edge_count;
  IntMatrix m(e, cycles.size());
  for (std::size_t j = 0; j < cycles.size(); ++j)
    for (std::size_t i = 0; i < e; ++i) m(i, j) = cycles[j].coeffs[i].get_num();
  return m;
}

std::vector<DirectedEdge> HomologyBasis::root_path(std::size_t x) const {
  std::vector<DirectedEdge> rev;
  // parent[x] is directed parent -> x, so walking up collects the path backwards.
  std::size_t cur = x;
  while (parent.at(cur)) {
    rev.push_back(*parent[cur]);
    cur = parent_vertex.at(cur);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

HomologyBasis homology_basis(const FiniteGraph& g) {
  HomologyBasis hb;
  hb.edge_count = g.edge_count();
  const std::size_t n = g.vertex_count();
  hb.parent.assign(n, std::nullopt);
  hb.parent_vertex.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<bool> in_tree(g.edge_count(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    hb.bfs_order.push_back(x);
    for (auto de : g.star(x)) {
      std::size_t y = g.terminus(de);
      if (seen[y]) continue;
      seen[y] = true;
      hb.parent[y] = de;
      hb.parent_vertex[y] = x;
      in_tree[de.edge] = true;
      hb.tree_edges.push_back(de.edge);
      queue.push_back(y);
    }
  }

  // Root-to-vertex chains, built along BFS order.
  std::vector<Chain1> to_root(n, Chain1(g.edge_count()));
  for (std::size_t x : hb.bfs_order) {
    if (!hb.parent[x]) continue;
    to_root[x] = to_root[hb.parent_vertex[x]];
    to_root[x].add(*hb.parent[x], 1);
  }

  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (in_tree[i]) continue;
    hb.cotree_edges.push_back(i);
    const auto& e = g.edge(i);
    Chain1 c(g.edge_count());
    c.coeffs[i] += 1;
    for (std::size_t k = 0; k < g.edge_count(); ++k)
      c.coeffs[k] += to_root[e.a].coeffs[k] - to_root[e.b].coeffs[k];
    hb.cycles.push_back(std::move(c));
  }

  const std::size_t b = hb.cycles.size();
  hb.gram = IntMatrix(b, b);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) hb.gram(i, j) = inner(hb.cycles[i], hb.cycles[j]).get_num();
  return hb;
}

std::vector<DirectedEdge> tree_path(const HomologyBasis& basis, std::size_t from, std::size_t to) {
  std::vector<DirectedEdge> up = basis.root_path(from);
  std::vector<DirectedEdge> down = basis.root_path(to);
  std::size_t common = 0;
  while (common < up.size() && common < down.size() && up[common] == down[common]) ++common;
  std::vector<DirectedEdge> path;
  for (std::size_t k = up.size(); k > common; --k) path.push_back(up[k - 1].inverse());
  for (std::size_t k = common; k < down.size(); ++k) path.push_back(down[k]);
  return path;
}

IntVector tree_lift(const FiniteGraph& g, const HomologyBasis& basis, const IntVector& divisor) {
  if (divisor.size() != g.vertex_count()) throw Error(ErrorCode::DimensionMismatch, "divisor size");
  Int total = 0;
  for (const auto& x : divisor) total += x;
  if (total != 0) throw Error(ErrorCode::InvalidInput, "divisor has nonzero degree");
  IntVector subtree = divisor;
  IntVector chain(g.edge_count());
  for (std::size_t k = basis.bfs_order.size(); k-- > 1;) {
    std::size_t x = basis.bfs_order[k];
    DirectedEdge p = *basis.parent[x];
    // p runs parent -> x; it must deliver subtree[x] into x.
    if (p.reversed) chain[p.edge] -= subtree[x];
    else chain[p.edge] += subtree[x];
    subtree[g.origin(p)] += subtree[x];
  }
  return chain;
}

IntVector cycle_coordinates(const FiniteGraph& g, const HomologyBasis& basis, const Chain1& c) {
  if (!boundary(g, c).is_zero()) throw Error(ErrorCode::InvalidInput, "chain is not a cycle");
  IntVector coords(basis.rank());
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    const Rat& x = c.coeffs[basis.cotree_edges[i]];
    if (x.get_den() != 1) throw Error(ErrorCode::InvalidInput, "cycle is not integral");
    coords[i] = x.get_num();
  }
  return coords;
}

}  // namespace crystnet
