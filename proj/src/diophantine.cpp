#include "crystnet/diophantine.hpp"

#include <algorithm>

namespace crystnet {

namespace {

Int common_d(const SurdComplex& a, const SurdComplex& b) {
  if (a.im != 0 && b.im != 0 && a.D != b.D)
    throw Error(ErrorCode::InvalidInput, "surd arithmetic across different D");
  if (a.im != 0) return a.D;
  if (b.im != 0) return b.D;
  return a.D;
}

}  // namespace

std::string SurdComplex::to_string() const {
  std::string s = crystnet::to_string(re);
  if (im == 0) return s;
  Rat a = abs(im);
  s += im < 0 ? " - " : " + ";
  if (a != 1) s += crystnet::to_string(a) + "*";
  s += "sqrt(-" + crystnet::to_string(D) + ")";
  return s;
}

SurdComplex operator+(const SurdComplex& a, const SurdComplex& b) {
  return {a.re + b.re, a.im + b.im, common_d(a, b)};
}

SurdComplex operator-(const SurdComplex& a, const SurdComplex& b) {
  return {a.re - b.re, a.im - b.im, common_d(a, b)};
}

SurdComplex operator*(const SurdComplex& a, const SurdComplex& b) {
  Int d = common_d(a, b);
  return {a.re * b.re - a.im * b.im * Rat(d), a.re * b.im + a.im * b.re, d};
}

SurdComplex operator*(const Rat& a, const SurdComplex& b) { return {a * b.re, a * b.im, b.D}; }

SurdComplex operator/(const SurdComplex& a, const SurdComplex& b) {
  Rat norm = b.re * b.re + b.im * b.im * Rat(b.D);
  if (norm == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
  return (1 / norm) * (a * b.conjugate());
}

bool three_squares_representable(const Int& D) {
  if (D <= 0 || !is_square_free(D)) throw Error(ErrorCode::NotSquareFree, "D must be a positive square-free integer");
  Int r = D % 8;
  return r != 7;
}

std::optional<std::array<Int, 3>> three_squares_witness(const Int& n) {
  if (n < 0) return std::nullopt;
  for (Int a = 0; 3 * a * a <= n; ++a)
    for (Int b = a; a * a + 2 * b * b <= n; ++b) {
      Int rest = n - a * a - b * b;
      if (mpz_perfect_square_p(rest.get_mpz_t()) == 0) continue;
      Int c;
      mpz_sqrt(c.get_mpz_t(), rest.get_mpz_t());
      return std::array<Int, 3>{a, b, c};
    }
  return std::nullopt;
}

Q3Point q3_point(const IntVector& n) {
  if (n.size() != 3) throw Error(ErrorCode::DimensionMismatch, "q3_point needs a 3-vector");
  if (content(n) != 1) throw Error(ErrorCode::NotPrimitive, "n must be a nonzero primitive vector");
  // the closed form degenerates when n2 = n3 = 0; rotate coordinates then
  std::size_t shift = 0;
  while (n[(shift + 1) % 3] == 0 && n[(shift + 2) % 3] == 0) ++shift;
  const Int& a = n[shift];
  const Int& b = n[(shift + 1) % 3];
  const Int& c = n[(shift + 2) % 3];
  SquareFree sf = square_free_part(dot(n, n));
  const Int& D = sf.D;
  // z1 = b^2 + c^2, z2 = -ab + c sqrt(-s), z3 = -ac - b sqrt(-s), sqrt(-s) = m sqrt(-D)
  std::array<SurdComplex, 3> z = {
      SurdComplex{Rat(b * b + c * c), 0, D},
      SurdComplex{Rat(-a * b), Rat(c * sf.m), D},
      SurdComplex{Rat(-a * c), Rat(-b * sf.m), D},
  };
  Q3Point out;
  out.D = D;
  for (std::size_t k = 0; k < 3; ++k) out.point[(shift + k) % 3] = z[k];
  for (std::size_t k = 0; k < 3; ++k) out.conjugate[k] = out.point[k].conjugate();
  for (const auto& x : out.point) {
    if (x.im == 0) continue;
    if (x.im < 0) std::swap(out.point, out.conjugate);
    break;
  }
  return out;
}

bool RationalRotation::is_valid() const {
  if (matrix.rows() != matrix.cols() || metric.rows() != matrix.rows()) return false;
  return matrix.transpose() * metric * matrix == metric && determinant(matrix) == 1;
}

RationalRotation RationalRotation::compose(const RationalRotation& o) const {
  if (metric != o.metric) throw Error(ErrorCode::DimensionMismatch, "rotations for different metrics");
  return {matrix * o.matrix, metric};
}

RatMatrix hexagonal_metric() { return RatMatrix{{1, Rat(-1, 2)}, {Rat(-1, 2), 1}}; }

std::optional<RationalRotation> coincidence_member(LatticeKind kind, const Rat& p, const Rat& q) {
  if (kind == LatticeKind::Z2) {
    if (p * p + q * q != 1) return std::nullopt;
    return RationalRotation{RatMatrix{{p, -q}, {q, p}}, RatMatrix::identity(2)};
  }
  if (p * p - p * q + q * q != 1) return std::nullopt;
  return RationalRotation{RatMatrix{{p, -q}, {q, p - q}}, hexagonal_metric()};
}

RationalRotation cayley_rotation(const RatMatrix& s, const RatMatrix& x) {
  const std::size_t d = s.rows();
  if (s.cols() != d || x.rows() != d || x.cols() != d)
    throw Error(ErrorCode::DimensionMismatch, "S and X must be square of the same size");
  if (!is_positive_definite(s)) throw Error(ErrorCode::InvalidInput, "S must be symmetric positive definite");
  if (!(x.transpose() * s + s * x).is_zero())
    throw Error(ErrorCode::NotInLieAlgebra, "X does not satisfy XᵗS + SX = 0");
  RatMatrix id = RatMatrix::identity(d);
  auto inv = inverse(id + x);
  if (!inv) throw Error(ErrorCode::SingularIplusX, "I + X is singular");
  return {(id - x) * *inv, s};
}

RationalRotation pythagorean_rotation(const Int& x, const Int& y, const Int& z) {
  if (x <= 0 || y <= 0 || z <= 0 || x * x + y * y != z * z)
    throw Error(ErrorCode::NotPythagorean, "need positive x, y, z with x^2 + y^2 = z^2");
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g != 1) throw Error(ErrorCode::NotPythagorean, "triple is not primitive");
  Rat p(x, z), q(y, z);
  p.canonicalize();
  q.canonicalize();
  return *coincidence_member(LatticeKind::Z2, p, q);
}

CoincidenceData coincidence_site_lattice(const RationalRotation& g) {
  const std::size_t d = g.matrix.rows();
  Int c = 1;
  for (std::size_t i = 0; i < d; ++i) {
    Int l = lcm_of_denominators(g.matrix.row(i));
    mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), l.get_mpz_t());
  }
  IntMatrix scaled_id(d, d), scaled_m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    scaled_id(i, i) = c;
    for (std::size_t j = 0; j < d; ++j) {
      Rat v = g.matrix(i, j) * Rat(c);
      scaled_m(i, j) = v.get_num();
    }
  }
  IntLattice l1 = IntLattice::from_generators(scaled_id);
  IntLattice l2 = IntLattice::from_generators(scaled_m);
  SumIntersection si = lattice_sum_intersection(l1, l2);
  CoincidenceData out;
  out.scale = c;
  out.coincidence = si.intersection;
  out.index_in_lattice = sublattice_index(si.intersection, l1);
  out.index_in_image = sublattice_index(si.intersection, l2);
  return out;
}

}  // namespace crystnet
