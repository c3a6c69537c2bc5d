#include <complex>
#include <random>

#include "crystnet/diophantine.hpp"
#include "crystnet/frames.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace crystnet;

namespace {

std::complex<double> to_complex(const SurdComplex& z) {
  return {z.re.get_d(), z.im.get_d() * std::sqrt(z.D.get_d())};
}

SurdComplex sc(Rat re, Rat im, long d) { return {re, im, Int(d)}; }

SurdComplex quadric(const std::array<SurdComplex, 3>& z) { return z[0] * z[0] + z[1] * z[1] + z[2] * z[2]; }

SurdComplex hyperplane(const IntVector& n, const std::array<SurdComplex, 3>& z) {
  SurdComplex s{0, 0, z[0].D};
  for (std::size_t i = 0; i < 3; ++i) s = s + Rat(n[i]) * z[i];
  return s;
}

}  // namespace

TEST_CASE("surd complex arithmetic") {
  SurdComplex a{1, 2, 3}, b{Rat(1, 2), -1, 3};
  SurdComplex ab{Rat(13, 2), 0, 3}, norm_a{13, 0, 3}, other{0, 1, 5}, zero{0, 0, 3};
  CHECK(a * b == ab);
  CHECK((a / b) * b == a);
  CHECK(a.conjugate() * a == norm_a);
  CHECK(std::abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-12);
  CHECK_THROWS_AS(a * other, Error);
  CHECK_THROWS_AS(a / zero, Error);
  CHECK(a.to_string() == "1 + 2*sqrt(-3)");
}

TEST_CASE("three squares") {
  CHECK_FALSE(three_squares_representable(7));
  CHECK(three_squares_representable(3));
  CHECK_THROWS_AS(three_squares_representable(12), Error);
  for (long d = 1; d <= 100; ++d) {
    if (!oracle::square_free_bruteforce(d)) continue;
    bool fast = three_squares_representable(d);
    CHECK(fast == (d % 8 != 7));
    CHECK(fast == oracle::three_squares_bruteforce(d, 10));
    CHECK(three_squares_witness(d).has_value() == fast);
  }
  auto w = three_squares_witness(Int(3));
  REQUIRE(w);
  CHECK((*w)[0] == 1);
  CHECK((*w)[2] == 1);
}

TEST_CASE("rational points of Q3") {
  auto p = q3_point({1, 1, 1});
  CHECK(p.D == 3);
  CHECK(p.point[0] == sc(2, 0, 3));
  CHECK(p.point[1] == sc(-1, 1, 3));
  CHECK(p.point[2] == sc(-1, -1, 3));
  CHECK(p.conjugate[1] == sc(-1, -1, 3));

  // (1,0,0): the displayed closed form vanishes, rotated coordinates used
  auto e = q3_point({1, 0, 0});
  CHECK(e.D == 1);
  CHECK(e.point[0] == sc(0, 0, 1));
  CHECK(e.point[1] == sc(1, 0, 1));
  CHECK(e.point[2] == sc(0, 1, 1));

  CHECK_THROWS_AS(q3_point({2, 0, 2}), Error);
  CHECK_THROWS_AS(q3_point({0, 0, 0}), Error);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    IntVector n(3);
    for (auto& x : n) x = static_cast<long>(rng() % 13) - 6;
    if (content(n) != 1) continue;
    auto q = q3_point(n);
    for (const auto& z : {q.point, q.conjugate}) {
      CHECK(quadric(z).is_zero());
      CHECK(hyperplane(n, z).is_zero());
      bool nonzero = false;
      for (const auto& c : z) nonzero = nonzero || !c.is_zero();
      CHECK(nonzero);
      std::complex<double> s = 0;
      for (const auto& c : z) s += to_complex(c) * to_complex(c);
      CHECK(std::abs(s) < 1e-9);
    }
    CHECK(q.D == square_free_part(dot(n, n)).D);
  }
}

TEST_CASE("coincidence rotations") {
  auto g = coincidence_member(LatticeKind::Z2, Rat(3, 5), Rat(4, 5));
  REQUIRE(g);
  CHECK(g->is_valid());
  CHECK(g->matrix.column(0) == RatVector{Rat(3, 5), Rat(4, 5)});
  CHECK(g->matrix.column(1) == RatVector{Rat(-4, 5), Rat(3, 5)});
  CHECK(coincidence_member(LatticeKind::Z2, 1, 0)->matrix == RatMatrix::identity(2));
  CHECK_FALSE(coincidence_member(LatticeKind::Z2, Rat(1, 2), Rat(1, 2)));

  auto h = coincidence_member(LatticeKind::HC, 1, 1);
  REQUIRE(h);
  CHECK(h->is_valid());
  CHECK(h->matrix != RatMatrix::identity(2));
  // (1,1) is the rotation by 60 degrees: order six
  RationalRotation acc = *h;
  for (int k = 1; k < 6; ++k) acc = acc.compose(*h);
  CHECK(acc.matrix == RatMatrix::identity(2));
  CHECK_FALSE(coincidence_member(LatticeKind::HC, Rat(3, 5), Rat(4, 5)));

  // the hexagonal rotation agrees with the Cartesian display on the triangle frame
  Rat p(8, 7), q(3, 7);
  auto hc = coincidence_member(LatticeKind::HC, p, q);
  REQUIRE(hc);
  RatMatrix tri{{1, 0}, {0, 1}, {-1, -1}};
  Frame moved = hexagonal_frame(tri * hc->matrix.transpose());
  Eigen::Matrix2d cart;
  const double s3 = std::sqrt(3.0) / 2;
  cart << p.get_d() - q.get_d() / 2, -s3 * q.get_d(), s3 * q.get_d(), p.get_d() - q.get_d() / 2;
  Eigen::MatrixXd expect = hexagonal_frame(tri).float_view() * cart.transpose();
  CHECK((moved.float_view() - expect).cwiseAbs().maxCoeff() < 1e-12);

  // group closure on samples
  auto g2 = pythagorean_rotation(5, 12, 13);
  CHECK(g->compose(g2).is_valid());
  CHECK(hc->compose(*h).is_valid());
}

TEST_CASE("Cayley parameterization") {
  RatMatrix id = RatMatrix::identity(2);
  CHECK(cayley_rotation(id, RatMatrix(2, 2)).matrix == id);
  // t = -1/2 gives (p, q) = (3/5, 4/5); t = 1/2 gives its inverse
  auto r = cayley_rotation(id, RatMatrix{{0, Rat(1, 2)}, {Rat(-1, 2), 0}});
  CHECK(r.matrix == coincidence_member(LatticeKind::Z2, Rat(3, 5), Rat(4, 5))->matrix);
  auto r2 = cayley_rotation(id, RatMatrix{{0, Rat(-1, 2)}, {Rat(1, 2), 0}});
  CHECK(r2.matrix == coincidence_member(LatticeKind::Z2, Rat(3, 5), Rat(-4, 5))->matrix);

  CHECK_THROWS_AS(cayley_rotation(id, RatMatrix{{1, 0}, {0, 0}}), Error);
  // X in the Lie algebra of a definite S has imaginary spectrum, so I + X is
  // never singular there; an indefinite S is rejected up front
  CHECK_THROWS_AS(cayley_rotation(RatMatrix{{1, 0}, {0, -1}}, RatMatrix(2, 2)), Error);

  // random X in the Lie algebra of S: X = S^{-1} K with K skew
  std::mt19937_64 rng(32);
  for (int t = 0; t < 60; ++t) {
    std::size_t d = 2 + rng() % 3;
    RatMatrix b(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) b(i, j) = static_cast<long>(rng() % 5) - 2;
    if (determinant(b) == 0) continue;
    RatMatrix s = b.transpose() * b;
    RatMatrix k(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        k(i, j) = Rat(static_cast<long>(rng() % 7) - 3, static_cast<long>(1 + rng() % 3));
        k(i, j).canonicalize();
        k(j, i) = -k(i, j);
      }
    RatMatrix x = *inverse(s) * k;
    auto rot = cayley_rotation(s, x);
    CHECK(rot.matrix.transpose() * s * rot.matrix == s);
    CHECK(rot.is_valid());
  }
}

TEST_CASE("Pythagorean rotations and coincidence site lattices") {
  auto r = pythagorean_rotation(3, 4, 5);
  CHECK(r.matrix == RatMatrix{{Rat(3, 5), Rat(-4, 5)}, {Rat(4, 5), Rat(3, 5)}});
  CHECK(pythagorean_rotation(5, 12, 13).is_valid());
  CHECK_THROWS_AS(pythagorean_rotation(3, 4, 6), Error);

  // the square frame joined with its rotated copy is the Pythagorean frame up to order
  Frame sq = Frame::rational(RatMatrix::identity(2));
  Frame rotated = Frame::rational(RatMatrix::identity(2) * r.matrix.transpose());
  Frame j = join(sq, rotated).reordered({0, 2, 1, 3});
  CHECK(j.numerators() == pythagorean_frame(3, 4, 5).numerators());

  for (auto [x, y, z] : std::vector<std::array<long, 3>>{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}}) {
    auto c = coincidence_site_lattice(pythagorean_rotation(x, y, z));
    CHECK(c.scale == z);
    CHECK(c.index_in_lattice == z);
    CHECK(c.index_in_image == z);
    // Z^2 against the integral image z g Z^2 = Z(x,y) + Z(-y,x)
    auto si = lattice_sum_intersection(IntLattice::full(2),
                                       IntLattice::from_generators(IntMatrix{{x, -y}, {y, x}}));
    CHECK(si.commensurable);
    CHECK(sublattice_index(si.intersection, IntLattice::full(2)) == z * z);
  }
}
