#include "crystnet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "crystnet/corpus.hpp"

namespace crystnet {

namespace {

// Collects pass/fail per case and keeps the first few failure notes.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++cases_;
    if (ok) return;
    ++failed_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  void note(const std::string& s) { extra_.push_back(s); }
  CheckResult result(int k, const std::string& name) const {
    CheckResult r{k, name, failed_ == 0 && cases_ > 0, ""};
    std::ostringstream out;
    out << cases_ << " cases";
    if (failed_ > 0) {
      out << ", " << failed_ << " failed:";
      for (const auto& n : notes_) out << " [" << n << "]";
    }
    for (const auto& e : extra_) out << "; " << e;
    r.detail = out.str();
    return r;
  }

 private:
  std::size_t cases_ = 0, failed_ = 0;
  std::vector<std::string> notes_, extra_;
};

std::mt19937_64 rng_for(std::uint64_t seed, int criterion) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(criterion), std::uint64_t{0x5eed}};
  return std::mt19937_64(seq);
}

std::uint64_t graph_seed(std::uint64_t seed, int criterion, std::size_t i) {
  return seed * 1000003 + static_cast<std::uint64_t>(criterion) * 1000 + i;
}

IntLattice random_summand(std::mt19937_64& rng, std::size_t n, std::size_t k, int spread = 3) {
  if (k == 0) return IntLattice::zero(n);
  while (true) {
    IntMatrix m(n, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = static_cast<long>(rng() % (2 * spread + 1)) - spread;
    if (rank(m) != k) continue;
    return saturate(IntLattice::from_generators(m));
  }
}

std::vector<NamedGraph> corpus_plus_random(std::uint64_t seed, int criterion, std::size_t count) {
  std::vector<NamedGraph> out = example_corpus();
  for (std::size_t i = 0; i < count; ++i)
    out.push_back({"random#" + std::to_string(i), random_graph(graph_seed(seed, criterion, i), 8)});
  return out;
}

// Spanning trees by scanning all (V-1)-subsets of non-loop edges; nullopt
// when the scan would be too long.
std::optional<std::uint64_t> spanning_trees_bruteforce(const FiniteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return 1;
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (const auto& e : g.edges())
    if (e.a != e.b) es.emplace_back(e.a, e.b);
  const std::size_t k = n - 1;
  if (es.size() < k) return 0;
  double subsets = 1;
  for (std::size_t i = 0; i < k; ++i) subsets = subsets * static_cast<double>(es.size() - i) / static_cast<double>(i + 1);
  if (subsets > 2e6) return std::nullopt;
  std::vector<bool> pick(es.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  std::uint64_t count = 0;
  do {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool ok = true;
    for (std::size_t i = 0; i < es.size() && ok; ++i) {
      if (!pick[i]) continue;
      std::size_t a = find(es[i].first), b = find(es[i].second);
      if (a == b) ok = false;
      else parent[a] = b;
    }
    if (ok) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

Chain1 as_chain(const HomologyBasis& hb, const RatVector& homology_coords) {
  return Chain1(to_rational(hb.cycle_matrix()) * homology_coords);
}

// balanced force with entries in {-2..2}/4; the last vertex absorbs the sum
RatMatrix random_force(std::mt19937_64& rng, std::size_t v, std::size_t d) {
  RatMatrix f(v, d);
  for (std::size_t k = 0; k < d; ++k) {
    Rat s = 0;
    for (std::size_t x = 0; x + 1 < v; ++x) {
      f(x, k) = Rat(static_cast<long>(rng() % 5) - 2, 4);
      f(x, k).canonicalize();
      s += f(x, k);
    }
    f(v - 1, k) = -s;
  }
  return f;
}

// E^d vol^2 comparison without roots: sum_a^d vol_b > sum_b^d vol_a
bool energy_greater(const Energy& a, const Energy& b, std::size_t d) {
  Rat pa = 1, pb = 1;
  for (std::size_t i = 0; i < d; ++i) {
    pa *= a.sum_sq;
    pb *= b.sum_sq;
  }
  return pa * b.vol_sq > pb * a.vol_sq;
}

// cycles killed by a complex edge labelling, straight from the linear
// conditions on C1; does not touch the realization code
IntLattice killed_cycles(const FiniteGraph& g, const std::vector<SurdComplex>& z) {
  const std::size_t e = g.edge_count(), v = g.vertex_count();
  RatMatrix m(v + 2, e);
  IntMatrix b = incidence_matrix(g);
  for (std::size_t j = 0; j < e; ++j) {
    for (std::size_t i = 0; i < v; ++i) m(i, j) = b(i, j);
    m(v, j) = z[j].re;
    m(v + 1, j) = z[j].im;
  }
  return IntLattice::from_generators(integer_kernel(m));
}

SurdComplex square_sum(const std::vector<SurdComplex>& z, const Int& d) {
  SurdComplex s{0, 0, d};
  for (const auto& w : z) s = s + w * w;
  return s;
}

bool vertex_sums_vanish(const FiniteGraph& g, const std::vector<SurdComplex>& z, const Int& d) {
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    SurdComplex s{0, 0, d};
    for (DirectedEdge de : g.star(x)) s = de.reversed ? s - z[de.edge] : s + z[de.edge];
    if (!s.is_zero()) return false;
  }
  return true;
}

struct CorpusSummand {
  std::string graph;
  VanishingSummand vs;
  Int h_sq;
};

// every summand of every corpus graph with h^2 <= bound under the cycle form
std::vector<CorpusSummand> corpus_summands(const Rat& bound) {
  std::vector<CorpusSummand> out;
  for (const auto& [name, g] : example_corpus()) {
    HomologyBasis hb = homology_basis(g);
    const std::size_t b = hb.rank();
    for (std::size_t r = 0; r < b; ++r) {
      std::vector<IntLattice> hs;
      if (r == 0) {
        hs.push_back(IntLattice::zero(b));
      } else {
        EnumerationOptions opt;
        opt.form = &hb.gram;
        hs = enumerate_summands(b, r, bound, opt);
      }
      for (const auto& h : hs) out.push_back({name, VanishingSummand::make(g, h), covolume_squared(h, &hb.gram)});
    }
  }
  return out;
}

std::string str(const Int& n) { return to_string(n); }
std::string str(const Rat& r) { return to_string(r); }

CheckResult criterion_1(std::uint64_t) {
  Tally t;
  GraphOptions low{true};
  for (std::size_t d = 1; d <= 6; ++d) {
    JacobianData j = jacobian(dipole(d + 1, low));
    std::vector<Int> expect{Int(static_cast<unsigned long>(d + 1))};
    t.check(j.invariants.nontrivial() == expect && j.invariants.free_rank == 0,
            "dipole " + std::to_string(d + 1) + " gives " + j.invariants.to_string());
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    JacobianData j = jacobian(complete_graph(n, low));
    std::vector<Int> expect(n - 2, Int(static_cast<unsigned long>(n)));
    t.check(j.invariants.nontrivial() == expect && j.invariants.free_rank == 0,
            "K" + std::to_string(n) + " gives " + j.invariants.to_string());
  }
  return t.result(1, "Jacobians of dipoles and complete graphs");
}

CheckResult criterion_2(std::uint64_t seed) {
  Tally t;
  std::size_t brute = 0;
  for (const auto& [name, g] : corpus_plus_random(seed, 2, 50)) {
    Int order = snf(homology_basis(g).gram).cokernel().order();
    Int kappa = tree_number(g);
    bool ok = order == kappa;
    if (auto bf = spanning_trees_bruteforce(g)) {
      ++brute;
      ok = ok && kappa == Int(static_cast<unsigned long>(*bf));
    }
    t.check(ok, name + ": |J| = " + str(order) + ", kappa = " + str(kappa));
  }
  t.note(std::to_string(brute) + " also counted by subset scan");
  return t.result(2, "Jacobian order equals the tree number");
}

CheckResult criterion_3(std::uint64_t) {
  Tally t;
  for (const auto& [name, g] : example_corpus()) {
    HomologyBasis hb = homology_basis(g);
    BuildingCochain v0 = harmonic_cochain_v0(g);
    const std::size_t b = hb.rank();
    auto tight = is_tight(v0.frame());
    t.check(tight && tight->exact && *tight->exact == 1 && v0.frame_operator() == RatMatrix::identity(b),
            name + ": not 1-tight");
    IntLattice expect = IntLattice::from_generators(incidence_matrix(g).transpose());
    t.check(vanishing_group(v0.frame()) == expect, name + ": vanishing group");
    bool dual = true;
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) {
        Chain1 vj = as_chain(hb, v0.coords.row(hb.cotree_edges[j]));
        if (inner(hb.cycles[i], vj) != Rat(i == j ? 1 : 0)) dual = false;
      }
    t.check(dual, name + ": dual basis");
  }
  return t.result(3, "v0 frame of the homology");
}

CheckResult criterion_4(std::uint64_t) {
  Tally t;
  FiniteGraph k4 = k4_labelled();
  HomologyBasis hb = homology_basis(k4);
  BuildingCochain v0 = harmonic_cochain_v0(k4);
  auto chain = [&](std::initializer_list<std::pair<const char*, int>> terms) {
    Chain1 c(k4.edge_count());
    for (auto [id, s] : terms) c.coeffs[*k4.find_edge(id)] += s;
    return c;
  };
  Chain1 c1 = chain({{"e2", 1}, {"f1", 1}, {"e3", -1}});
  Chain1 c2 = chain({{"e3", 1}, {"f2", 1}, {"e1", -1}});
  Chain1 c3 = chain({{"e1", 1}, {"f3", 1}, {"e2", -1}});
  Chain1 c4 = chain({{"f1", -1}, {"f2", -1}, {"f3", -1}});
  Chain1 total(k4.edge_count());
  for (const auto* c : {&c1, &c2, &c3, &c4})
    for (std::size_t i = 0; i < total.coeffs.size(); ++i) total.coeffs[i] += c->coeffs[i];
  t.check(total.is_zero(), "c1 + c2 + c3 + c4 != 0");
  auto quarter = [&](const Chain1& a, const Chain1& b) {
    Chain1 out(k4.edge_count());
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
      out.coeffs[i] = (a.coeffs[i] - b.coeffs[i]) / 4;
      out.coeffs[i].canonicalize();
    }
    return out;
  };
  struct Row {
    const char* edge;
    const Chain1* plus;
    const Chain1* minus;
  };
  for (const Row& r : {Row{"e1", &c3, &c2}, Row{"e2", &c1, &c3}, Row{"e3", &c2, &c1}, Row{"f1", &c1, &c4},
                       Row{"f2", &c2, &c4}, Row{"f3", &c3, &c4}}) {
    Chain1 v = as_chain(hb, v0.coords.row(*k4.find_edge(r.edge)));
    t.check(v == quarter(*r.plus, *r.minus), std::string("v0(") + r.edge + ")");
  }
  return t.result(4, "K4 edge formulas");
}

CheckResult criterion_5(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng = rng_for(seed, 5);
  std::size_t perturbed = 0;
  for (const auto& [name, g] : example_corpus()) {
    const std::size_t b = g.betti_number();
    std::vector<IntLattice> hs{IntLattice::zero(b)};
    if (b >= 3) hs.push_back(random_summand(rng, b, 1 + rng() % (b - 2), 2));
    for (const auto& h : hs) {
      VanishingSummand vs = VanishingSummand::make(g, h);
      Realization r = standard_realization(vs);
      const std::size_t d = vs.d;
      const std::string tag = name + " rank(H)=" + std::to_string(h.rank());
      Distortion dist = distortion(r);
      t.check(dist.harmonic && resultant_force(g, r.cochain).is_zero(), tag + ": not harmonic");
      t.check(dist.tight && r.cochain.frame_operator() == RatMatrix::identity(d), tag + ": not tight");
      t.check(dist.ratio == 1.0, tag + ": R != 1");
      t.check(minimal_energy_gap(r.cochain.frame()).equality, tag + ": energy bound not attained");
      Energy e0 = energy(r);
      t.check(e0.sum_sq == Rat(static_cast<long>(2 * d)), tag + ": sum of squares " + str(e0.sum_sq));

      PeriodHomomorphism rho = standard_period_homomorphism(vs);
      std::size_t done = 0;
      for (int tries = 0; done < 20 && tries < 400; ++tries) {
        Realization p;
        if (g.vertex_count() > 1 && tries % 2 == 0) {
          RatMatrix f = random_force(rng, g.vertex_count(), d);
          if (f.is_zero()) continue;
          p = realize(g, harmonic_realization_from_force(vs, rho.period_hom, rho.metric, f));
        } else {
          RatMatrix skew = RatMatrix::identity(d);
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
              skew(i, j) += Rat(static_cast<long>(rng() % 5) - 2, 8);
              skew(i, j).canonicalize();
            }
          if (determinant(skew) == 0) continue;
          p = realize(g, harmonic_realization_from_force(vs, skew * rho.period_hom, rho.metric,
                                                         RatMatrix(g.vertex_count(), d)));
          if (distortion(p).tight) continue;  // similar to the standard one
        }
        ++done;
        t.check(energy_greater(energy(p), e0, d), tag + ": perturbation not more energetic");
      }
      t.check(done == 20, tag + ": only " + std::to_string(done) + " perturbations");
      perturbed += done;
    }
  }
  t.note(std::to_string(perturbed) + " perturbations");
  return t.result(5, "standard realization identities and minimal energy");
}

CheckResult criterion_6(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng = rng_for(seed, 6);
  for (int k = 0; k < 40; ++k) {
    std::size_t n = 3 + rng() % 4, r = 1 + rng() % (n - 2);
    IntLattice h = random_summand(rng, n, r);
    PeriodLattice pl = period_lattice(frame_from_summand(h, n, n - r));
    t.check(pl.vol_squared * Rat(covolume_squared(h)) == 1, "frame n=" + std::to_string(n) + ": vol^2 h^2 != 1");
  }
  std::size_t count = 0;
  for (const auto& cs : corpus_summands(12)) {
    Realization r = standard_realization(cs.vs);
    Int kappa = tree_number(cs.vs.graph);
    t.check(r.vol_squared * Rat(cs.h_sq) == Rat(kappa),
            cs.graph + " h^2=" + str(cs.h_sq) + ": vol^2 = " + str(r.vol_squared));
    t.check(torus_volume(cs.vs) * Rat(cs.h_sq) == Rat(kappa), cs.graph + ": torus volume");
    ++count;
  }
  t.note(std::to_string(count) + " corpus summands with h^2 <= 12");
  return t.result(6, "height and volume duality");
}

CheckResult criterion_7(std::uint64_t) {
  Tally t;
  auto w3 = [](Rat re, Rat im) { return SurdComplex{re, im, 3}; };
  // kagome: (a, ā, -1) twice with a = (1 + sqrt(-3))/2
  FiniteGraph kag = kagome_quotient();
  SurdComplex a = w3(Rat(1, 2), Rat(1, 2)), ab = w3(Rat(1, 2), Rat(-1, 2)), m1 = w3(-1, 0);
  std::vector<SurdComplex> kag_z = {a, ab, m1, a, ab, m1};
  IntLattice kh = killed_cycles(kag, kag_z);
  t.check(kh.rank() == 2, "kagome: killed cycles");
  if (kh.rank() == 2) {
    QuadricPoint2D q = quadric_point_2d(VanishingSummand::from_edge_cycles(kag, kh.basis().columns()));
    t.check(q.D == 3 && (projectively_equal(q.point, kag_z) || projectively_equal(q.conjugate, kag_z)),
            "kagome point");
  }
  FiniteGraph dice = dice_quotient();
  SurdComplex w = w3(Rat(-1, 2), Rat(1, 2)), wb = w3(Rat(-1, 2), Rat(-1, 2)), one = w3(1, 0);
  std::vector<SurdComplex> dice_z = {one, w, wb, m1, w3(Rat(1, 2), Rat(1, 2)), w3(Rat(1, 2), Rat(-1, 2))};
  IntLattice dh = killed_cycles(dice, dice_z);
  t.check(dh.rank() == 2, "dice: killed cycles");
  if (dh.rank() == 2) {
    QuadricPoint2D q = quadric_point_2d(VanishingSummand::from_edge_cycles(dice, dh.basis().columns()));
    t.check(q.D == 3 && (projectively_equal(q.point, dice_z) || projectively_equal(q.conjugate, dice_z)),
            "dice point");
  }
  std::size_t planar = 0;
  for (const auto& cs : corpus_summands(12)) {
    if (cs.vs.d != 2) continue;
    ++planar;
    QuadricPoint2D q = quadric_point_2d(standard_realization(cs.vs));
    Int kappa = tree_number(cs.vs.graph);
    Int expect = square_free_part(Int(kappa * cs.h_sq)).D;
    t.check(q.D == expect, cs.graph + ": D = " + str(q.D) + ", expected " + str(expect));
    t.check(square_sum(q.point, q.D).is_zero() && vertex_sums_vanish(cs.vs.graph, q.point, q.D),
            cs.graph + ": point off the quadric");
  }
  t.note(std::to_string(planar) + " planar summands");
  return t.result(7, "quadric points of planar nets");
}

// rational orthogonal M with b = a Mᵗ, from two independent rows of a
bool rotation_between(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatMatrix sa = RatMatrix::from_rows(2, {a.row(i), a.row(j)});
      RatMatrix sb = RatMatrix::from_rows(2, {b.row(i), b.row(j)});
      auto inv = inverse(sa);
      if (!inv) continue;
      RatMatrix mt = *inv * sb;  // sa Mᵗ = sb
      RatMatrix m = mt.transpose();
      if (m.transpose() * m != RatMatrix::identity(2)) return false;
      return a * mt == b;
    }
  return false;
}

bool uniform_scales(const Frame& f) {
  const auto& s = f.scales();
  return std::all_of(s.begin(), s.end(), [&](const ColumnScale& c) { return c == s.front(); });
}

CheckResult criterion_8(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng = rng_for(seed, 8);
  std::vector<std::pair<std::string, Frame>> frames;
  for (const auto& name : catalog_names()) frames.push_back({name, catalog_frame(name)});
  const std::size_t base = frames.size();
  for (std::size_t i = 0; i < base; ++i) {
    const auto& [name, f] = frames[i];
    if (!f.is_exact()) continue;
    auto tc = is_tight(f);
    if (tc && tc->exact) frames.push_back({name + "/normalized", f.scaled_by_sqrt(1 / *tc->exact)});
    frames.push_back({name + "/bent", f.with_vector_scaled(0, 3)});
  }
  for (int k = 0; k < 100; ++k) {
    std::size_t n = 2 + rng() % 5, r = rng() % (n - 1);
    frames.push_back({"summand", frame_from_summand(random_summand(rng, n, r), n, n - r)});
  }
  std::size_t one_tight = 0;
  for (const auto& [name, f] : frames) {
    auto tc = is_tight(f);
    bool tight1 = tc && (tc->exact ? *tc->exact == 1 : std::abs(tc->value - 1.0) <= kFloatTolerance);
    one_tight += tight1;
    t.check(naimark_check(f) == tight1, name + ": Naimark vs 1-tight");
  }
  t.note(std::to_string(frames.size()) + " frames, " + std::to_string(one_tight) + " 1-tight");

  // congruence against explicit rational rotations
  std::vector<Frame> planar;
  for (const auto& [name, f] : frames)
    if (f.is_exact() && f.dim() == 2 && uniform_scales(f) && f.size() >= 2) planar.push_back(f);
  const std::vector<std::array<long, 3>> triples{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}};
  std::size_t pairs = 0;
  for (const auto& f : planar) {
    std::vector<Frame> family{f};
    for (const auto& [x, y, z] : triples) {
      RationalRotation g = pythagorean_rotation(x, y, z);
      family.push_back(Frame::exact(f.numerators() * g.matrix.transpose(), f.scales()));
    }
    family.push_back(f.with_vector_scaled(0, 2));
    if (f.size() >= 3) family.push_back(f.reordered([&] {
      std::vector<std::size_t> p(f.size());
      std::iota(p.begin(), p.end(), 0);
      std::swap(p[0], p[2]);
      return p;
    }()));
    for (const auto& a : family)
      for (const auto& b : family) {
        ++pairs;
        bool by_rotation = rotation_between(a.numerators(), b.numerators());
        t.check(congruent(a, b) == (a.gram() == b.gram()) && (a.gram() == b.gram()) == by_rotation,
                "congruence vs Gram vs rotation");
      }
  }
  t.note(std::to_string(pairs) + " congruence pairs");
  return t.result(8, "Naimark condition and congruence");
}

bool square_free_bruteforce(long n) {
  for (long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

bool three_squares_bruteforce(long D, long window) {
  for (long m = 1; m <= window; ++m) {
    const long target = D * m * m;
    for (long a = 0; a * a <= target; ++a)
      for (long b = a; a * a + b * b <= target; ++b) {
        long c2 = target - a * a - b * b;
        long c = static_cast<long>(std::lround(std::sqrt(static_cast<double>(c2))));
        if (c >= b && c * c == c2) return true;
      }
  }
  return false;
}

CheckResult criterion_9(std::uint64_t) {
  Tally t;
  for (long d = 1; d <= 100; ++d) {
    if (!square_free_bruteforce(d)) continue;
    bool fast = three_squares_representable(d);
    t.check(fast == (d % 8 != 7) && fast == three_squares_bruteforce(d, 8), "D = " + std::to_string(d));
  }
  return t.result(9, "sums of three squares");
}

CheckResult criterion_10(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng = rng_for(seed, 10);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = 2 + rng() % 7, r = 1 + rng() % (n - 1);
    IntLattice h = random_summand(rng, n, r);
    IntLattice hp = orth_complement_int(h);
    AbelianInvariants direct = snf(hconcat(h.basis(), hp.basis())).cokernel();
    AbelianInvariants dual = dual_quotient(h);
    t.check(direct.isomorphic(dual) && dual.order() == covolume_squared(h),
            "N=" + std::to_string(n) + ": " + direct.to_string() + " vs " + dual.to_string());
  }
  return t.result(10, "complement identity");
}

CheckResult criterion_11(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng = rng_for(seed, 11);
  for (const auto& [name, g] : corpus_plus_random(seed, 11, 20)) {
    t.check(abel_theorem_check(g, 0).holds(), name + " from vertex 0");
    std::size_t x0 = rng() % g.vertex_count();
    if (x0 != 0) t.check(abel_theorem_check(g, x0).holds(), name + " from vertex " + std::to_string(x0));
  }
  return t.result(11, "Abel's theorem");
}

std::uint64_t rank1_bruteforce(std::size_t n, long bound) {
  long r = 0;
  while ((r + 1) * (r + 1) <= bound) ++r;
  std::vector<long> x(n, -r);
  std::uint64_t count = 0;
  while (true) {
    long nn = 0, g = 0;
    for (long v : x) {
      nn += v * v;
      g = std::gcd(g, v);
    }
    if (nn > 0 && nn <= bound && g == 1) ++count;
    std::size_t i = 0;
    while (i < n && x[i] == r) x[i++] = -r;
    if (i == n) break;
    ++x[i];
  }
  return count / 2;
}

CheckResult criterion_12(std::uint64_t) {
  Tally t;
  const double pi = std::acos(-1.0);
  const double zeta[] = {0, 0, pi * pi / 6.0, 1.2020569031595942};
  const double omega[] = {0, 0, pi, 4.0 * pi / 3.0};
  const double h = 1000.0;
  for (std::size_t n : {2u, 3u}) {
    t.check(count_rank1_summands(n, 60) == rank1_bruteforce(n, 60), "small count N=" + std::to_string(n));
    double got = static_cast<double>(count_rank1_summands(n, 1000000));
    double expect = 0.5 / zeta[n] * omega[n] * std::pow(h, static_cast<double>(n));
    double ratio = got / expect;
    t.check(std::abs(ratio - 1.0) <= 0.1, "N=" + std::to_string(n) + " ratio " + format_double(ratio));
    t.note("N=" + std::to_string(n) + ": " + format_double(got) + " vs " + format_double(expect));
  }
  return t.result(12, "rank-one height counting");
}

const std::map<std::string, std::vector<int>>& suites() {
  static const std::map<std::string, std::vector<int>> s{
      {"jacobian", {1, 2, 11}}, {"homology", {3, 4}},   {"nets", {5, 6, 7}},
      {"frames", {8}},          {"arithmetic", {9, 10}}, {"heights", {12}},
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
  };
  return s;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult run_criterion(int k, std::uint64_t seed) {
  static const std::function<CheckResult(std::uint64_t)> table[] = {
      criterion_1, criterion_2, criterion_3,  criterion_4,  criterion_5,  criterion_6,
      criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12,
  };
  if (k < 1 || k > kCriterionCount) throw Error(ErrorCode::BadParameters, "no criterion " + std::to_string(k));
  try {
    return table[k - 1](seed);
  } catch (const std::exception& e) {
    return {k, "criterion " + std::to_string(k), false, std::string("exception: ") + e.what()};
  }
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, ks] : suites()) out.push_back(name);
  return out;
}

std::vector<int> suite_criteria(const std::string& suite) {
  auto it = suites().find(suite);
  if (it == suites().end()) {
    std::string known;
    for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
    throw Error(ErrorCode::UnknownSuite, "'" + suite + "' (known: " + known + ")");
  }
  return it->second;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed) {
  SuiteReport r;
  r.suite = suite;
  r.seed = seed;
  for (int k : suite_criteria(suite)) r.checks.push_back(run_criterion(k, seed));
  return r;
}

Json to_json(const SuiteReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["passed"] = report.passed();
  j["checks"] = Json::array();
  for (const auto& c : report.checks)
    j["checks"].push_back({{"criterion", c.criterion}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return j;
}

}  // namespace crystnet
