#pragma once

// Picard group and combinatorial Jacobian of a finite graph, the Abel–Jacobi
// and Albanese maps, the isomorphism between them and the Q/Z pairing.

#include <cstddef>
#include <optional>
#include <vector>

#include "crystnet/exact.hpp"
#include "crystnet/graph.hpp"
#include "crystnet/lattice.hpp"

namespace crystnet {

/// Number of spanning trees: determinant of the Laplacian without vertex 0.
Int tree_number(const FiniteGraph& g);

struct JacobianData {
  HomologyBasis basis;
  IntMatrix gram;                 // cycle Gram matrix A
  SnfResult snf;                  // of A
  AbelianInvariants invariants;   // of A^{-1}Z^b / Z^b
  Int kappa;
  RatMatrix v0;                   // E×b, v0(e) in homology coordinates
};

/// Throws Internal if the invariant factors do not multiply to kappa.
JacobianData jacobian(const FiniteGraph& g);

/// Element of J = H1^# / H1 in homology coordinates, reduced to [0, 1).
struct JacobianElement {
  RatVector coords;

  static JacobianElement reduce(RatVector x);
  bool is_zero() const;
  bool operator==(const JacobianElement& o) const { return coords == o.coords; }
  JacobianElement operator+(const JacobianElement& o) const;
  JacobianElement times(const Int& k) const;
  /// Smallest k > 0 with k x = 0.
  Int order() const;
};

struct PicardData {
  SnfResult snf;                  // of the reduced Laplacian (vertex 0 removed)
  AbelianInvariants invariants;
  std::vector<IntVector> generators;  // degree-zero divisors, generator i has order factor i
};

PicardData picard(const FiniteGraph& g);

struct DivisorClass {
  IntVector representative;  // degree zero
  IntVector canonical;       // coordinate i reduced to [0, k_i)
  bool operator==(const DivisorClass& o) const { return canonical == o.canonical; }
};

/// Class of a degree-zero divisor. Throws InvalidInput for nonzero degree.
DivisorClass divisor_class(const FiniteGraph& g, const PicardData& pic, const IntVector& divisor);

/// Class of x - x0. Throws BadVertex.
DivisorClass abel_jacobi(const FiniteGraph& g, std::size_t x, std::size_t x0);
DivisorClass abel_jacobi(const FiniteGraph& g, const PicardData& pic, std::size_t x, std::size_t x0);

/// Sum of v0 along the tree path from x0 to x. Throws BadVertex.
JacobianElement albanese(const FiniteGraph& g, std::size_t x, std::size_t x0);
JacobianElement albanese(const JacobianData& jac, const FiniteGraph& g, std::size_t x, std::size_t x0);
/// Sum of v0 along an arbitrary directed path.
JacobianElement albanese_along(const JacobianData& jac, const FiniteGraph& g, const std::vector<DirectedEdge>& path);

/// phi([D]): lift D to an integral 1-chain and push it through v0.
JacobianElement abel_map(const JacobianData& jac, const FiniteGraph& g, const IntVector& divisor);

struct AbelCheck {
  bool commutes = false;     // phi(AJ(x)) = AL(x) for every x
  bool isomorphism = false;  // generator orders match and the image has kappa elements
  bool holds() const { return commutes && isomorphism; }
};

AbelCheck abel_theorem_check(const FiniteGraph& g, std::size_t x0 = 0);

/// <a, b> = aᵗ A b mod 1, in [0, 1).
Rat jacobian_pairing(const JacobianData& jac, const JacobianElement& a, const JacobianElement& b);

/// All elements of J, via the SNF generators. Throws SizeTooLarge above `limit`.
std::vector<JacobianElement> jacobian_elements(const JacobianData& jac, std::size_t limit = 4096);

}  // namespace crystnet
