#pragma once

// Finite frames in d-space. Exact frames store each column as rational
// numerators over a common surd m*sqrt(D), which keeps the Gram matrix
// rational. Anything else goes through a floating representation.

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crystnet/exact.hpp"
#include "crystnet/lattice.hpp"

namespace crystnet {

/// Column j of an exact frame is numerators(:, j) / (m * sqrt(D)).
struct ColumnScale {
  Int m = 1;
  Int D = 1;
  bool operator==(const ColumnScale&) const = default;
};

inline constexpr double kFloatTolerance = 1e-9;

class Frame {
 public:
  Frame() = default;
  /// Rows of `numerators` are the vectors; D must be square-free, m positive.
  static Frame exact(RatMatrix numerators, std::vector<ColumnScale> scales);
  static Frame rational(RatMatrix vectors);
  /// Rows are the vectors; marks the frame approximate.
  static Frame approximate(Eigen::MatrixXd vectors);

  std::size_t size() const { return size_; }
  std::size_t dim() const { return dim_; }
  bool is_exact() const { return exact_; }

  /// Throws InexactFrame for approximate frames.
  const RatMatrix& numerators() const;
  const std::vector<ColumnScale>& scales() const;

  /// N×d floating matrix of the vectors.
  Eigen::MatrixXd float_view() const;
  /// Exact Gram matrix; throws InexactFrame.
  RatMatrix gram() const;
  Eigen::MatrixXd float_gram() const;
  /// Exact squared norm of vector i; throws InexactFrame.
  Rat norm_squared(std::size_t i) const;

  /// Every vector multiplied by sqrt(c), c > 0.
  Frame scaled_by_sqrt(const Rat& c) const;
  /// Vector i multiplied by a rational factor.
  Frame with_vector_scaled(std::size_t i, const Rat& factor) const;
  /// New frame whose i-th vector is the old vector order[i].
  Frame reordered(const std::vector<std::size_t>& order) const;

 private:
  std::size_t size_ = 0;
  std::size_t dim_ = 0;
  bool exact_ = true;
  RatMatrix num_;
  std::vector<ColumnScale> scales_;
  Eigen::MatrixXd approx_;
};

struct FrameOperatorData {
  /// S(k, l) = s_numerators(k, l) / (m_k m_l sqrt(D_k D_l)) for exact frames.
  RatMatrix s_numerators;
  std::vector<ColumnScale> scales;
  RatMatrix gram;
  Rat trace;  // tr S = sum of squared norms
  std::optional<Rat> tight_constant;
  bool approximate = false;
  Eigen::MatrixXd s_float;
  Eigen::MatrixXd gram_float;
  std::optional<double> tight_constant_float;
};

/// Throws NotAFrame when the vectors do not span.
FrameOperatorData frame_operator(const Frame& f);

struct TightConstant {
  double value = 0;
  std::optional<Rat> exact;
};
std::optional<TightConstant> is_tight(const Frame& f);

/// G^2 = G and rank G = d.
bool naimark_check(const Frame& f);

/// Gram equality (exact when both frames are exact).
bool congruent(const Frame& a, const Frame& b);

/// Continued-fraction recognition of x as p/q with q <= max_denominator.
std::optional<Rat> recognize_rational(double x, long max_denominator = 1000,
                                      double tolerance = kFloatTolerance);

/// Rational Gram matrix G/lambda when the Gram matrix is essentially rational.
std::optional<RatMatrix> essentially_rational_gram(const Frame& f);

bool is_crystallographic(const Frame& f);

/// H(S) = ker(rho) in Z^N; throws NotCrystallographic.
IntLattice vanishing_group(const Frame& f);

struct PeriodLattice {
  IntMatrix lift;  // N×d integer columns mapped by rho onto a basis
  RatMatrix gram;  // d×d Gram matrix of that basis
  Rat vol_squared;
};
/// Basis of rho(Z^N) for an exact frame; throws InexactFrame.
PeriodLattice period_lattice(const Frame& f);

/// 1-tight frame in Q^N / H_R coordinates whose vanishing group is H.
Frame frame_from_summand(const IntLattice& h, std::size_t n, std::size_t d);

struct EnergyGap {
  Rat lhs_pow_d;  // (sum |v_i|^2)^d
  Rat rhs;        // d^d vol^2 h^2
  bool equality = false;
};
EnergyGap minimal_energy_gap(const Frame& f);

/// Concatenation; exact when the column surds agree, approximate otherwise.
Frame join(const Frame& a, const Frame& b);
bool join_is_crystallographic(const Frame& a, const Frame& b);

struct AutomorphismData {
  std::vector<std::vector<std::size_t>> permutations;
  bool isotropic = false;
  bool strongly_isotropic = false;
};
/// Permutations sigma with sigma(W) = W for the vanishing subspace W.
AutomorphismData automorphism_group(const Frame& f, std::size_t max_size = 8);

// Catalog. Polygon and polyhedron frames use unit vectors.
Frame polygon_frame(std::size_t n);
Frame simplex_frame(std::size_t d);
/// family in {'A','B','C','D'}; positive roots in standard coordinates.
Frame root_system_frame(char family, std::size_t rank);
Frame g2_frame();
Frame pythagorean_frame(const Int& x, const Int& y, const Int& z);
Frame tetrahedron_frame();
Frame cube_frame();
Frame octahedron_frame();
/// Vectors given in the basis a1 = (1, 0), a2 = (-1/2, sqrt(3)/2) of the
/// hexagonal lattice; rows of `coords` are the coefficient pairs.
Frame hexagonal_frame(const RatMatrix& coords);

/// Lookup by name: "triangle", "square", "hexagon", "pentagon", "polygon:N",
/// "simplex:d", "A:d", "B:d", "C:d", "D:d", "G2", "pythagorean:x,y,z",
/// "tetrahedron", "cube", "octahedron". Throws BadParameters.
Frame catalog_frame(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace crystnet
