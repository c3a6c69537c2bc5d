#pragma once

// Periodic realizations of topological crystals over a finite graph:
// building cochains, standard and harmonic realizations, energy, distortion,
// finite patches and the 2D quadric points.

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

#include "crystnet/diophantine.hpp"
#include "crystnet/exact.hpp"
#include "crystnet/frames.hpp"
#include "crystnet/graph.hpp"
#include "crystnet/lattice.hpp"

namespace crystnet {

/// A summand H of H1(X0, Z), given in the coordinates of the homology basis.
struct VanishingSummand {
  FiniteGraph graph;
  HomologyBasis basis;
  IntLattice h;
  std::size_t d = 0;

  /// Throws DimensionMismatch, NotASummand, RankMismatch (when d would be 0).
  static VanishingSummand make(const FiniteGraph& g, const IntLattice& h);
  /// H generated by integral cycles written over the forward edges.
  static VanishingSummand from_edge_cycles(const FiniteGraph& g, const std::vector<IntVector>& cycles);
  /// The generators of H as edge chains (E×rank).
  IntMatrix edge_generators() const;
};

/// Orthonormal coordinates for a rational metric: the coordinate vector x has
/// orthonormal components (x * transform)_k / (m_k sqrt(D_k)).
struct OrthonormalChart {
  RatMatrix transform;
  std::vector<ColumnScale> scales;
  Eigen::MatrixXd float_transform;
};

OrthonormalChart orthonormal_chart(const RatMatrix& metric);

/// v(e) for every forward edge, as rows of `coords` in a basis with Gram
/// matrix `metric`; v(ē) = -v(e) implicitly.
struct BuildingCochain {
  RatMatrix coords;
  RatMatrix metric;

  std::size_t dim() const { return metric.rows(); }
  /// E×E Gram matrix of the bond vectors.
  RatMatrix gram() const;
  /// Bond vectors in orthonormal coordinates (exact surd columns).
  Frame frame() const;
  /// Frame operator in the cochain basis: coordsᵗ coords metric.
  RatMatrix frame_operator() const;
};

/// f(x) = sum of v(e) over e in E_x, one row per vertex.
RatMatrix resultant_force(const FiniteGraph& g, const BuildingCochain& v);

/// v0(e) = P0(e) in homology coordinates (metric = the cycle Gram matrix).
BuildingCochain harmonic_cochain_v0(const FiniteGraph& g);

struct Realization {
  FiniteGraph graph;
  HomologyBasis basis;
  BuildingCochain cochain;
  IntLattice vanishing;           // kernel of [v] in homology coordinates
  IntMatrix period_lift;          // b×d, homology classes mapping to the period basis
  IntMatrix mu;                   // d×b, homology coordinates -> lattice coordinates
  RatMatrix cycle_periods;        // b×d, row i = period of basis cycle i
  RatMatrix period_coords;        // d×d, row k = period vector k
  RatMatrix period_gram;
  Rat vol_squared;
  RatMatrix positions;            // V×d, root vertex at the origin
  std::vector<IntVector> edge_shift;  // lattice offset of the terminus copy per forward edge
  Eigen::MatrixXd float_positions;
  Eigen::MatrixXd float_periods;
  Eigen::MatrixXd float_bonds;
};

/// Throws DegeneratePeriodLattice when [v] does not have a lattice image.
Realization realize(const FiniteGraph& g, const BuildingCochain& v);

Realization standard_realization(const VanishingSummand& vs);

/// Unique cochain with resultant force f and period homomorphism rho.
/// `period_hom` is d×b (column i = rho of basis cycle i) in a basis of R^d
/// with Gram matrix `metric`; `force` is V×d in the same basis. Throws
/// ForceNotBalanced, ClassKillsWrongSubgroup, DimensionMismatch.
BuildingCochain harmonic_realization_from_force(const VanishingSummand& vs, const RatMatrix& period_hom,
                                                const RatMatrix& metric, const RatMatrix& force);

/// rho for the standard realization of vs, in the form accepted above.
struct PeriodHomomorphism {
  RatMatrix period_hom;
  RatMatrix metric;
};
PeriodHomomorphism standard_period_homomorphism(const VanishingSummand& vs);

struct Energy {
  Rat sum_sq;   // over E0, both orientations
  Rat vol_sq;
  double value = 0;
};

/// Throws DegeneratePeriodLattice.
Energy energy(const Realization& r);

struct Distortion {
  RatMatrix force;
  bool harmonic = false;
  bool tight = false;  // frame operator exactly scalar
  double ratio = 0;
};

Distortion distortion(const Realization& r);

/// kappa / vol(H_R / H)^2.
Rat torus_volume(const VanishingSummand& vs);

struct PatchEdge {
  DirectedEdge edge;
  std::size_t target = 0;
  IntVector target_offset;
};

struct PatchVertex {
  std::size_t vertex = 0;
  IntVector offset;
  Eigen::VectorXd position;
  std::vector<PatchEdge> edges;
};

/// Every vertex translated by all offsets in [-radius, radius]^d, offsets in
/// lexicographic order, vertices in index order within an offset.
std::vector<PatchVertex> realize_patch(const Realization& r, std::size_t radius);

struct RealismReport {
  std::vector<std::pair<std::size_t, std::size_t>> collisions;      // patch indices
  std::vector<std::pair<std::size_t, std::size_t>> close_nonadjacent;
  std::vector<std::size_t> zero_edges;                              // forward edges with v(e) = 0
  bool injective() const { return collisions.empty(); }
  bool passes() const { return collisions.empty() && close_nonadjacent.empty() && zero_edges.empty(); }
};

RealismReport realism_check(const Realization& r, std::size_t radius, double c);

struct QuadricPoint2D {
  Int D = 1;
  std::vector<SurdComplex> point;      // first nonzero coordinate 1, positive orientation first
  std::vector<SurdComplex> conjugate;
};

/// Point of the quadric attached to a 2D realization: z(e) is v(e) read as a
/// complex number, scaled projectively. Throws NotTwoDimensional.
QuadricPoint2D quadric_point_2d(const Realization& r);
QuadricPoint2D quadric_point_2d(const VanishingSummand& vs);

/// True when a and b agree up to a common nonzero factor.
bool projectively_equal(const std::vector<SurdComplex>& a, const std::vector<SurdComplex>& b);

struct CubicProjection {
  VanishingSummand summand;
  Realization realization;
  Q3Point q3;
  QuadricPoint2D point;
};

/// Projection of the cubic lattice along the primitive vector n, seen as the
/// standard realization over the three-loop bouquet. Throws NotPrimitive.
CubicProjection cubic_projection(const IntVector& n);

}  // namespace crystnet
