#pragma once

// Graph files, summand specs, and JSON/OBJ serialization. Exact values are
// always written as strings ("p/q" for rationals).

#include <string>

#include "json.hpp"

#include "crystnet/diophantine.hpp"
#include "crystnet/exact.hpp"
#include "crystnet/frames.hpp"
#include "crystnet/graph.hpp"
#include "crystnet/jacobian.hpp"
#include "crystnet/lattice.hpp"
#include "crystnet/nets.hpp"

namespace crystnet {

using Json = nlohmann::ordered_json;

/// `V <n>` then `E <id> <a> <b>` lines; blank lines and `#` comments allowed.
/// Throws ParseError naming the line, or the graph validation errors.
FiniteGraph parse_graph_text(const std::string& text, GraphOptions options = {});
/// {"vertices": n, "edges": [[id, a, b], ...]}; unknown keys are rejected.
FiniteGraph parse_graph_json(const std::string& text, GraphOptions options = {});
/// Dispatches on the first non-blank character ('{' means JSON).
FiniteGraph parse_graph(const std::string& text, GraphOptions options = {});
/// Throws InvalidInput if the file cannot be read.
FiniteGraph load_graph(const std::string& path, GraphOptions options = {});
std::string graph_to_text(const FiniteGraph& g);

/// "zero" / "{0}" for the zero summand, otherwise rows of integers separated
/// by ';' or newlines, one generator per row in homology coordinates.
IntLattice parse_summand(const std::string& spec, std::size_t b);

/// "sqrt(n)" or a rational; returns the bound on h^2.
Rat parse_height_bound(const std::string& text);

Json to_json(const Rat& r);
Json to_json(const Int& n);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
Json to_json(const AbelianInvariants& a);
Json to_json(const Frame& f);
Json to_json(const SurdComplex& z);
Json to_json(const QuadricPoint2D& q);

/// Homology basis as edge-id lists with signs, plus the cycle Gram matrix.
Json basis_to_json(const FiniteGraph& g, const HomologyBasis& hb);

struct RealizationReport {
  bool harmonic = false;
  bool tight = false;
  Energy energy;
  double ratio = 0;
  Rat torus_volume_sq;
  std::optional<QuadricPoint2D> point;  // d = 2 only
  bool all_green() const { return harmonic && tight && ratio == 1.0; }
};

RealizationReport report_for(const VanishingSummand& vs, const Realization& r);
Json to_json(const RealizationReport& rep);

/// {vertices: [{id, offset, pos}], edges: [...], period_vectors, gram, ...}
Json export_json(const Realization& r, std::size_t radius);
/// Vertices and line elements of a patch; `header` lines become comments.
std::string export_obj(const Realization& r, std::size_t radius, const std::vector<std::string>& header = {});

/// {invariants, kappa, abel_jacobi_table, pairing_table}
Json jacobian_to_json(const FiniteGraph& g);

/// Fixed formatting for floats in exports.
std::string format_double(double x);

}  // namespace crystnet
