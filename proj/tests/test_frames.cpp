#include <array>
#include <random>

#include "crystnet/frames.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace crystnet;
using testing_support::random_summand;

namespace {

bool is_identity(const FrameOperatorData& op, const Rat& alpha) {
  return op.tight_constant && *op.tight_constant == alpha;
}

// float-only Gram as an independent check of the exact one
void check_gram_against_floats(const Frame& f) {
  Eigen::MatrixXd a = f.float_view();
  Eigen::MatrixXd g = a * a.transpose();
  RatMatrix ge = f.gram();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      CHECK(std::abs(ge(i, j).get_d() - g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) < 1e-12);
}

// vectors of an exact frame whose columns all share m and D, rotated by a
// rational orthogonal matrix
Frame rotate_uniform(const Frame& f, const RatMatrix& r) {
  RatMatrix num = f.numerators() * r.transpose();
  return Frame::exact(num, f.scales());
}

IntLattice lattice(std::initializer_list<std::initializer_list<Int>> rows) { return IntLattice::from_generators(IntMatrix(rows)); }

std::vector<Frame> exact_catalog() {
  std::vector<Frame> out;
  for (const auto& name : catalog_names()) {
    Frame f = catalog_frame(name);
    if (f.is_exact()) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("frame operator examples") {
  auto ortho = Frame::rational(RatMatrix::identity(3));
  auto op = frame_operator(ortho);
  CHECK(is_identity(op, 1));
  CHECK(op.trace == 3);

  Frame tri = polygon_frame(3).scaled_by_sqrt(Rat(2, 3));
  CHECK(tri.is_exact());
  auto t = is_tight(tri);
  REQUIRE(t);
  CHECK(*t->exact == 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(tri.norm_squared(i) == Rat(2, 3));

  auto py = frame_operator(pythagorean_frame(3, 4, 5));
  CHECK(is_identity(py, 2));

  auto twice = join(ortho, ortho);
  CHECK(*is_tight(twice)->exact == 2);
  CHECK_FALSE(is_tight(ortho.with_vector_scaled(0, 2)));

  CHECK_THROWS_AS(frame_operator(Frame::rational(RatMatrix{{1, 0}, {2, 0}})), Error);
}

TEST_CASE("trace identity and float agreement across the catalog") {
  for (const auto& name : catalog_names()) {
    Frame f = catalog_frame(name);
    auto op = frame_operator(f);
    Eigen::MatrixXd a = f.float_view();
    CHECK(std::abs(op.s_float.trace() - a.squaredNorm()) < 1e-9);
    if (!f.is_exact()) continue;
    Rat sum = 0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += f.norm_squared(i);
    CHECK(op.trace == sum);
    check_gram_against_floats(f);
  }
}

TEST_CASE("Naimark condition matches 1-tightness") {
  std::vector<Frame> frames = exact_catalog();
  std::size_t base = frames.size();
  for (std::size_t i = 0; i < base; ++i) {
    auto t = is_tight(frames[i]);
    if (t && t->exact) frames.push_back(frames[i].scaled_by_sqrt(1 / *t->exact));
    frames.push_back(frames[i].with_vector_scaled(0, 3));
  }
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = 2 + rng() % 5, r = rng() % (n - 1);
    IntLattice h = r == 0 ? IntLattice::zero(n) : random_summand(rng, n, r);
    frames.push_back(frame_from_summand(h, n, n - r));
  }
  std::size_t one_tight = 0;
  for (const auto& f : frames) {
    auto t = is_tight(f);
    bool tight1 = t && t->exact && *t->exact == 1;
    CHECK(naimark_check(f) == tight1);
    one_tight += tight1;
  }
  CHECK(one_tight > 100);
}

TEST_CASE("congruence") {
  Frame f = pythagorean_frame(3, 4, 5);
  RatMatrix r{{Rat(3, 5), Rat(-4, 5)}, {Rat(4, 5), Rat(3, 5)}};
  Frame g = rotate_uniform(f, r);
  CHECK(g.numerators() != f.numerators());
  CHECK(congruent(f, g));
  CHECK_FALSE(congruent(f, f.reordered({1, 0, 2, 3})));

  Frame a = frame_from_summand(lattice({{1}, {1}, {1}}), 3, 2);
  Frame b = frame_from_summand(lattice({{1}, {1}, {0}}), 3, 2);
  CHECK_FALSE(congruent(a, b));
  CHECK_THROWS_AS(congruent(a, f), Error);
}

TEST_CASE("crystallographic test") {
  CHECK_FALSE(is_crystallographic(polygon_frame(5)));
  CHECK_FALSE(is_crystallographic(polygon_frame(8)));
  CHECK(is_crystallographic(polygon_frame(3)));
  CHECK(is_crystallographic(polygon_frame(4)));
  CHECK(is_crystallographic(polygon_frame(6)));
  Frame sevenths = Frame::rational(RatMatrix{{Rat(1, 7), 0}, {Rat(2, 7), Rat(3, 7)}, {0, Rat(1, 7)}});
  CHECK(is_crystallographic(sevenths));
  // an approximate frame that is secretly rational is still recognized
  Eigen::MatrixXd m(3, 2);
  m << 1, 0, 0.5, std::sqrt(3.0) / 2, -0.5, std::sqrt(3.0) / 2;
  CHECK(is_crystallographic(Frame::approximate(m)));
  CHECK_THROWS_AS(vanishing_group(polygon_frame(5)), Error);

  CHECK(*recognize_rational(0.75) == Rat(3, 4));
  CHECK(*recognize_rational(-1.0 / 3.0) == Rat(-1, 3));
  CHECK_FALSE(recognize_rational(std::sqrt(2.0)));
}

TEST_CASE("vanishing groups") {
  // the two displayed relations span a sublattice of index z in the kernel
  for (auto [x, y, z] : std::vector<std::array<long, 3>>{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}}) {
    IntLattice rel = lattice({{z, 0}, {-x, y}, {0, -z}, {y, x}});
    IntLattice h = vanishing_group(pythagorean_frame(x, y, z));
    CHECK(h.rank() == 2);
    CHECK(h.is_summand());
    CHECK(h == saturate(rel));
    CHECK(sublattice_index(rel, h) == z);
  }
  CHECK(vanishing_group(pythagorean_frame(3, 4, 5)).contains({1, 1, -2, 2}));

  IntLattice ones = lattice({{1}, {1}, {1}});
  CHECK(vanishing_group(frame_from_summand(ones, 3, 2)) == ones);
  CHECK(vanishing_group(Frame::rational(RatMatrix::identity(3))).rank() == 0);
  // period lattice of the triangle is hexagonal with unit basis
  auto per = period_lattice(polygon_frame(3));
  CHECK(per.vol_squared == Rat(3, 4));
}

TEST_CASE("frame from a summand") {
  Frame sq = frame_from_summand(lattice({{1}, {0}, {0}}), 3, 2);
  RatMatrix g = sq.gram();
  CHECK(g == RatMatrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}});

  Frame tri = frame_from_summand(lattice({{1}, {1}, {1}}), 3, 2);
  CHECK(tri.gram() == RatMatrix{{Rat(2, 3), Rat(-1, 3), Rat(-1, 3)},
                                {Rat(-1, 3), Rat(2, 3), Rat(-1, 3)},
                                {Rat(-1, 3), Rat(-1, 3), Rat(2, 3)}});
  check_gram_against_floats(tri);

  Frame id = frame_from_summand(IntLattice::zero(3), 3, 3);
  CHECK(id.gram() == RatMatrix::identity(3));

  CHECK_THROWS_AS(frame_from_summand(lattice({{2}, {0}, {0}}), 3, 2), Error);
  CHECK_THROWS_AS(frame_from_summand(lattice({{1}, {0}, {0}}), 3, 1), Error);

  std::mt19937_64 rng(22);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = 2 + rng() % 6, r = 1 + rng() % (n - 1);
    IntLattice h = random_summand(rng, n, r);
    Frame f = frame_from_summand(h, n, n - r);
    auto t = is_tight(f);
    REQUIRE(t);
    CHECK(*t->exact == 1);
    CHECK(vanishing_group(f) == h);
    // height/volume duality for the period lattice
    CHECK(period_lattice(f).vol_squared * Rat(covolume_squared(h)) == 1);
    CHECK(minimal_energy_gap(f).equality);
  }
}

TEST_CASE("minimal energy gap") {
  Frame ortho = Frame::rational(RatMatrix::identity(3));
  auto e = minimal_energy_gap(ortho);
  CHECK(e.equality);
  CHECK(e.lhs_pow_d == 27);

  std::mt19937_64 rng(23);
  for (int k = 0; k < 40; ++k) {
    std::size_t n = 3 + rng() % 4, r = 1 + rng() % (n - 2);
    Frame f = frame_from_summand(random_summand(rng, n, r), n, n - r);
    // doubling a nonzero vector breaks tightness; rescaling keeps it tight
    std::size_t i = 0;
    while (f.norm_squared(i) == 0) ++i;
    Frame bent = f.with_vector_scaled(i, 2);
    auto g = minimal_energy_gap(bent);
    CHECK_FALSE(g.equality);
    CHECK(g.lhs_pow_d > g.rhs);
    CHECK(is_tight(bent).has_value() == g.equality);
    CHECK(minimal_energy_gap(f.scaled_by_sqrt(Rat(5, 2))).equality);
  }
  CHECK_THROWS_AS(minimal_energy_gap(polygon_frame(5)), Error);
}

TEST_CASE("joins") {
  // p^2 - pq + q^2 = 1 with (p, q) = (8/7, 3/7)
  Rat p(8, 7), q(3, 7);
  RatMatrix tri{{1, 0}, {0, 1}, {-1, -1}};
  RatMatrix g{{p, -q}, {q, p - q}};  // columns are images of a1, a2
  RatMatrix rotated = tri * g.transpose();
  Frame a = hexagonal_frame(tri);
  Frame b = hexagonal_frame(rotated);
  CHECK(congruent(a, b));
  Frame j = join(a, b);
  CHECK(j.is_exact());
  CHECK(j.size() == 6);
  CHECK(*is_tight(j)->exact == 3);
  CHECK(is_crystallographic(j));
  CHECK(join_is_crystallographic(a, b));

  Frame sq = polygon_frame(4);
  CHECK(*is_tight(join(sq, sq))->exact == 2 * *is_tight(sq)->exact);

  Frame mixed = join(sq, polygon_frame(3));
  CHECK_FALSE(mixed.is_exact());
  auto t = is_tight(mixed);
  REQUIRE(t);
  CHECK(std::abs(t->value - 3.5) < 1e-9);
  CHECK_FALSE(is_crystallographic(mixed));
  CHECK_THROWS_AS(join(sq, tetrahedron_frame()), Error);
}

TEST_CASE("catalog frames") {
  Frame s3 = simplex_frame(3);
  RatMatrix g = s3.gram();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(g(i, j) == (i == j ? Rat(3, 4) : Rat(-1, 4)));

  Frame a2 = root_system_frame('A', 2);
  CHECK(a2.size() == 3);
  CHECK(is_tight(a2));
  CHECK(is_crystallographic(a2));
  CHECK(root_system_frame('A', 3).size() == 6);
  CHECK(root_system_frame('B', 3).size() == 9);
  CHECK(root_system_frame('C', 3).size() == 9);
  CHECK(root_system_frame('D', 4).size() == 12);
  CHECK(g2_frame().size() == 6);
  for (auto [fam, r] : std::vector<std::pair<char, std::size_t>>{
           {'A', 1}, {'A', 4}, {'B', 2}, {'B', 4}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5}}) {
    Frame f = root_system_frame(fam, r);
    CHECK(is_tight(f));
    CHECK(is_crystallographic(f));
  }
  CHECK(is_tight(g2_frame()));
  // G2 root lengths: three short (2) and three long (6)
  for (std::size_t i = 0; i < 6; ++i) CHECK(g2_frame().norm_squared(i) == (i < 3 ? 2 : 6));
  CHECK_THROWS_AS(root_system_frame('C', 2), Error);
  CHECK_THROWS_AS(root_system_frame('D', 3), Error);
  CHECK_THROWS_AS(root_system_frame('E', 6), Error);

  for (const char* name : {"tetrahedron", "cube", "octahedron"}) {
    Frame f = catalog_frame(name);
    CHECK(is_tight(f));
    CHECK(is_crystallographic(f));
  }
  CHECK_THROWS_AS(pythagorean_frame(6, 8, 10), Error);
  CHECK_THROWS_AS(pythagorean_frame(3, 4, 6), Error);
  CHECK_THROWS_AS(catalog_frame("dodecahedron"), Error);
  CHECK_THROWS_AS(catalog_frame("polygon:x"), Error);

  // vectors summing to zero for the symmetric catalog entries
  for (Frame f : {polygon_frame(3), polygon_frame(4), polygon_frame(6), simplex_frame(2), simplex_frame(4),
                  tetrahedron_frame(), cube_frame(), octahedron_frame()}) {
    for (std::size_t k = 0; k < f.dim(); ++k) {
      Rat s = 0;
      for (std::size_t i = 0; i < f.size(); ++i) s += f.numerators()(i, k);
      CHECK(s == 0);
    }
  }
}

TEST_CASE("automorphism groups") {
  auto tri = automorphism_group(simplex_frame(2));
  CHECK(tri.strongly_isotropic);
  CHECK(tri.permutations.size() == 6);
  auto tet = automorphism_group(simplex_frame(3));
  CHECK(tet.strongly_isotropic);
  CHECK(tet.permutations.size() == 24);

  auto sq = automorphism_group(polygon_frame(4));
  CHECK(sq.isotropic);
  CHECK_FALSE(sq.strongly_isotropic);
  CHECK(sq.permutations.size() == 8);

  auto hex = automorphism_group(polygon_frame(6));
  CHECK(hex.isotropic);
  CHECK_FALSE(hex.strongly_isotropic);

  Frame sq2 = polygon_frame(4).scaled_by_sqrt(4);
  auto mixed = automorphism_group(join(polygon_frame(4), sq2));
  CHECK_FALSE(mixed.isotropic);

  CHECK_THROWS_AS(automorphism_group(root_system_frame('B', 3)), Error);
}
