#pragma once

// Integer lattices: Hermite and Smith normal forms, saturation, dual
// quotients, covolumes, orthogonal complements and summand enumeration.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "crystnet/exact.hpp"

namespace crystnet {

/// Finite part listed with its unit factors kept, so that the factor count
/// matches the matrix the invariants came from.
struct AbelianInvariants {
  std::vector<Int> factors;
  std::size_t free_rank = 0;

  Int order() const;
  std::vector<Int> nontrivial() const;
  /// Group isomorphism: equal free rank and equal non-unit factors.
  bool isomorphic(const AbelianInvariants& other) const;
  std::string to_string() const;
};

struct HnfResult {
  IntMatrix H;  // H = M U
  IntMatrix U;
  std::size_t rank = 0;
};

/// Column Hermite normal form. Pivot rows increase with the column index,
/// pivots are positive, entries left of a pivot lie in [0, pivot), and the
/// trailing n - rank columns are zero.
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
  IntMatrix P, D, Q;  // P M Q = D
  IntMatrix P_inverse;
  std::vector<Int> diagonal;  // min(rows, cols) entries, divisibility chain

  /// Invariants of coker(M) = Z^rows / M Z^cols.
  AbelianInvariants cokernel() const;
};

SnfResult snf(const IntMatrix& m);

class IntLattice {
 public:
  IntLattice() = default;
  /// Lattice generated by the columns of `generators` (any rank).
  static IntLattice from_generators(const IntMatrix& generators);
  static IntLattice zero(std::size_t ambient_dim);
  static IntLattice full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.cols(); }
  /// N×k basis in column Hermite normal form.
  const IntMatrix& basis() const { return basis_; }
  bool is_summand() const { return summand_; }
  bool contains(const IntVector& v) const;

  bool operator==(const IntLattice& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const IntLattice& o) const { return !(*this == o); }

 private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
  bool summand_ = true;
};

/// L_Q ∩ Z^N.
IntLattice saturate(const IntLattice& l);

/// Gram matrix BᵗQB of the basis; Q = identity when `form` is null.
IntMatrix lattice_gram(const IntLattice& l, const IntMatrix* form = nullptr);
/// Invariants of H^#/H from the SNF of the Gram matrix.
AbelianInvariants dual_quotient(const IntLattice& h, const IntMatrix* form = nullptr);
/// det of the Gram matrix (1 for the zero lattice).
Int covolume_squared(const IntLattice& h, const IntMatrix* form = nullptr);

/// {x in Z^N : <x, H> = 0}.
IntLattice orth_complement_int(const IntLattice& h);

/// Unimodular N×N matrix whose first rank(H) columns are a basis of the
/// summand H; the remaining columns span a complement. Throws NotASummand.
IntMatrix unimodular_completion(const IntLattice& h);

/// Basis (columns) of the integer kernel of M; always saturated.
IntMatrix integer_kernel(const IntMatrix& m);
/// Integer kernel of a rational matrix (rows are scaled to integers first).
IntMatrix integer_kernel(const RatMatrix& m);

struct EnumerationOptions {
  /// Positive definite integral form; identity when null.
  const IntMatrix* form = nullptr;
  std::size_t max_results = 200000;
  std::size_t max_candidates = 200000;
  /// Above half rank, enumerate complements instead (same result, cheaper).
  bool allow_dual = true;
};

/// All direct summands of Z^N of the given rank with covolume squared at most
/// `height_sq_bound`, each once (HNF representative), ordered by covolume
/// squared and then by basis entries.
std::vector<IntLattice> enumerate_summands(std::size_t n, std::size_t rank, const Rat& height_sq_bound,
                                           const EnumerationOptions& options = {});

/// Number of rank-one summands of Z^N with h^2 <= height_sq_bound, by Möbius
/// inversion over lattice-point counts in balls.
std::uint64_t count_rank1_summands(std::size_t n, std::uint64_t height_sq_bound);

/// Lattice points of Z^n (including 0) with squared norm <= r2.
std::uint64_t ball_point_count(std::size_t n, std::uint64_t r2);

struct SquareFree {
  Int D;
  Int m;
};

/// n = D m^2 with D square-free. Trial division runs to the cube root of the
/// cofactor, up to 2e7; throws InputTooLarge beyond that.
SquareFree square_free_part(const Int& n);
bool is_square_free(const Int& n);

struct SumIntersection {
  IntLattice sum;
  IntLattice intersection;
  bool commensurable = false;
};

SumIntersection lattice_sum_intersection(const IntLattice& l1, const IntLattice& l2);

/// Index of a full-rank sublattice inside a lattice of the same rank and span.
Int sublattice_index(const IntLattice& sub, const IntLattice& super);

}  // namespace crystnet
