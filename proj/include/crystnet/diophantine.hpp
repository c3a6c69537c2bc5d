#pragma once

// Arithmetic side conditions: sums of three squares, rational points of the
// quadric z1^2 + z2^2 + z3^2 = 0, and rational rotations of lattices.

#include <array>
#include <optional>
#include <string>

#include "crystnet/exact.hpp"
#include "crystnet/lattice.hpp"

namespace crystnet {

/// re + im * sqrt(-D) with D square-free and positive.
struct SurdComplex {
  Rat re;
  Rat im;
  Int D = 1;

  SurdComplex conjugate() const { return {re, -im, D}; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const SurdComplex& o) const { return re == o.re && im == o.im && (D == o.D || im == 0); }
  std::string to_string() const;
};

SurdComplex operator+(const SurdComplex& a, const SurdComplex& b);
SurdComplex operator-(const SurdComplex& a, const SurdComplex& b);
SurdComplex operator*(const SurdComplex& a, const SurdComplex& b);
SurdComplex operator*(const Rat& a, const SurdComplex& b);
/// Throws InvalidInput on division by zero.
SurdComplex operator/(const SurdComplex& a, const SurdComplex& b);

/// A square-free D is a sum of three rational squares iff D mod 8 != 7.
bool three_squares_representable(const Int& D);
/// Some (a, b, c) with a^2 + b^2 + c^2 = n, a <= b <= c, by direct search.
std::optional<std::array<Int, 3>> three_squares_witness(const Int& n);

struct Q3Point {
  std::array<SurdComplex, 3> point;      // first nonzero imaginary part positive
  std::array<SurdComplex, 3> conjugate;
  Int D;
};

/// The point of z1^2 + z2^2 + z3^2 = 0 attached to the frame with vanishing
/// group Z n. Throws NotPrimitive.
Q3Point q3_point(const IntVector& n);

/// Rational matrix M with MᵗSM = S and det M = 1, acting on lattice
/// coordinates with respect to a basis whose Gram matrix is S.
struct RationalRotation {
  RatMatrix matrix;
  RatMatrix metric;

  bool is_valid() const;
  RationalRotation compose(const RationalRotation& o) const;
};

enum class LatticeKind { Z2, HC };

/// Metric of the hexagonal basis a1, a2 with |a_i| = 1 and a1·a2 = -1/2.
RatMatrix hexagonal_metric();

/// [[p,-q],[q,p]] when p^2 + q^2 = 1 (Z2), [[p,-q],[q,p-q]] in the hexagonal
/// basis when p^2 - pq + q^2 = 1 (HC).
std::optional<RationalRotation> coincidence_member(LatticeKind kind, const Rat& p, const Rat& q);

/// (I - X)(I + X)^{-1} for X with XᵗS + SX = 0. Throws NotInLieAlgebra,
/// SingularIplusX, InvalidInput (S not symmetric positive definite).
RationalRotation cayley_rotation(const RatMatrix& s, const RatMatrix& x);

/// Rotation with (p, q) = (x/z, y/z). Throws NotPythagorean.
RationalRotation pythagorean_rotation(const Int& x, const Int& y, const Int& z);

struct CoincidenceData {
  Int scale;               // c with c*M integral
  IntLattice coincidence;  // c * (Z^d ∩ M Z^d), integral
  Int index_in_lattice;    // [Z^d : Z^d ∩ M Z^d]
  Int index_in_image;      // [M Z^d : Z^d ∩ M Z^d]
};

/// Coincidence site lattice of Z^d (lattice coordinates) and its image.
CoincidenceData coincidence_site_lattice(const RationalRotation& g);

}  // namespace crystnet
