#include "crystnet/jacobian.hpp"

#include <set>

namespace crystnet {

namespace {

Rat frac(const Rat& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rat r = x - Rat(fl);
  r.canonicalize();
  return r;
}

Int mod_positive(const Int& a, const Int& k) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), k.get_mpz_t());
  return r;
}

IntMatrix reduced_laplacian(const FiniteGraph& g) {
  IntMatrix lap = laplacian(g);
  const std::size_t n = g.vertex_count() - 1;
  IntMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = lap(i + 1, j + 1);
  return r;
}

void check_vertex(const FiniteGraph& g, std::size_t x) {
  if (x >= g.vertex_count()) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(x) + " out of range");
}

}  // namespace

Int tree_number(const FiniteGraph& g) {
  if (g.vertex_count() == 1) return 1;
  return determinant(reduced_laplacian(g));
}

JacobianData jacobian(const FiniteGraph& g) {
  JacobianData j;
  j.basis = homology_basis(g);
  j.gram = j.basis.gram;
  j.snf = snf(j.gram);
  j.invariants = j.snf.cokernel();
  j.kappa = tree_number(g);
  if (j.invariants.order() != j.kappa) throw Error(ErrorCode::Internal, "invariant factors do not multiply to kappa");
  auto ainv = inverse(to_rational(j.gram));
  if (!ainv) throw Error(ErrorCode::Internal, "cycle Gram matrix is singular");
  j.v0 = to_rational(j.basis.cycle_matrix()) * *ainv;
  return j;
}

JacobianElement JacobianElement::reduce(RatVector x) {
  for (auto& c : x) c = frac(c);
  return {std::move(x)};
}

bool JacobianElement::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

JacobianElement JacobianElement::operator+(const JacobianElement& o) const {
  if (coords.size() != o.coords.size()) throw Error(ErrorCode::DimensionMismatch, "Jacobian elements of different graphs");
  RatVector s(coords.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = coords[i] + o.coords[i];
  return reduce(std::move(s));
}

JacobianElement JacobianElement::times(const Int& k) const {
  RatVector s(coords.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = coords[i] * Rat(k);
  return reduce(std::move(s));
}

Int JacobianElement::order() const {
  Int k = 1;
  for (const auto& c : coords) mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), c.get_den_mpz_t());
  return k;
}

PicardData picard(const FiniteGraph& g) {
  PicardData p;
  const std::size_t n = g.vertex_count() - 1;
  if (n == 0) return p;
  p.snf = snf(reduced_laplacian(g));
  p.invariants = p.snf.cokernel();
  for (std::size_t i = 0; i < n; ++i) {
    IntVector d(n + 1);
    Int total = 0;
    for (std::size_t x = 0; x < n; ++x) {
      d[x + 1] = p.snf.P_inverse(x, i);
      total += d[x + 1];
    }
    d[0] = -total;
    p.generators.push_back(std::move(d));
  }
  return p;
}

DivisorClass divisor_class(const FiniteGraph& g, const PicardData& pic, const IntVector& divisor) {
  if (divisor.size() != g.vertex_count()) throw Error(ErrorCode::DimensionMismatch, "divisor needs one entry per vertex");
  Int total = 0;
  for (const auto& c : divisor) total += c;
  if (total != 0) throw Error(ErrorCode::InvalidInput, "divisor must have degree zero");
  DivisorClass out;
  out.representative = divisor;
  const std::size_t n = g.vertex_count() - 1;
  IntVector y(divisor.begin() + 1, divisor.end());
  if (n == 0) return out;
  IntVector c = pic.snf.P * y;
  out.canonical.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.canonical[i] = mod_positive(c[i], pic.snf.diagonal[i]);
  return out;
}

DivisorClass abel_jacobi(const FiniteGraph& g, const PicardData& pic, std::size_t x, std::size_t x0) {
  check_vertex(g, x);
  check_vertex(g, x0);
  IntVector d(g.vertex_count());
  d[x] += 1;
  d[x0] -= 1;
  return divisor_class(g, pic, d);
}

DivisorClass abel_jacobi(const FiniteGraph& g, std::size_t x, std::size_t x0) {
  return abel_jacobi(g, picard(g), x, x0);
}

JacobianElement albanese_along(const JacobianData& jac, const FiniteGraph& g, const std::vector<DirectedEdge>& path) {
  Chain1 c = path_chain(g, path);
  return JacobianElement::reduce(jac.v0.transpose() * c.coeffs);
}

JacobianElement albanese(const JacobianData& jac, const FiniteGraph& g, std::size_t x, std::size_t x0) {
  check_vertex(g, x);
  check_vertex(g, x0);
  return albanese_along(jac, g, tree_path(jac.basis, x0, x));
}

JacobianElement albanese(const FiniteGraph& g, std::size_t x, std::size_t x0) {
  return albanese(jacobian(g), g, x, x0);
}

JacobianElement abel_map(const JacobianData& jac, const FiniteGraph& g, const IntVector& divisor) {
  IntVector lift = tree_lift(g, jac.basis, divisor);
  return JacobianElement::reduce(jac.v0.transpose() * to_rational(lift));
}

AbelCheck abel_theorem_check(const FiniteGraph& g, std::size_t x0) {
  check_vertex(g, x0);
  JacobianData jac = jacobian(g);
  PicardData pic = picard(g);
  AbelCheck out;
  out.commutes = true;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    DivisorClass aj = abel_jacobi(g, pic, x, x0);
    if (!(abel_map(jac, g, aj.representative) == albanese(jac, g, x, x0))) out.commutes = false;
  }
  // phi is a homomorphism by linearity of the lift; check it is bijective
  out.isomorphism = pic.invariants.order() == jac.kappa;
  std::vector<JacobianElement> images;
  for (std::size_t i = 0; i < pic.generators.size(); ++i) {
    JacobianElement im = abel_map(jac, g, pic.generators[i]);
    if (im.order() != pic.snf.diagonal[i]) out.isomorphism = false;
    images.push_back(std::move(im));
  }
  if (out.isomorphism && jac.kappa <= 4096) {
    // the subgroup generated by the images must be all of J
    std::set<RatVector> seen{JacobianElement::reduce(RatVector(jac.gram.rows())).coords};
    std::vector<JacobianElement> frontier{JacobianElement::reduce(RatVector(jac.gram.rows()))};
    while (!frontier.empty()) {
      std::vector<JacobianElement> next;
      for (const auto& e : frontier)
        for (const auto& gen : images) {
          JacobianElement s = e + gen;
          if (seen.insert(s.coords).second) next.push_back(s);
        }
      frontier = std::move(next);
    }
    out.isomorphism = Int(static_cast<unsigned long>(seen.size())) == jac.kappa;
  }
  return out;
}

Rat jacobian_pairing(const JacobianData& jac, const JacobianElement& a, const JacobianElement& b) {
  RatMatrix q = to_rational(jac.gram);
  return frac(form(a.coords, q, b.coords));
}

std::vector<JacobianElement> jacobian_elements(const JacobianData& jac, std::size_t limit) {
  if (jac.kappa > Int(static_cast<unsigned long>(limit)))
    throw Error(ErrorCode::SizeTooLarge, "Jacobian has more than " + std::to_string(limit) + " elements");
  const std::size_t b = jac.gram.rows();
  std::vector<JacobianElement> gens;
  std::vector<unsigned long> orders;
  for (std::size_t i = 0; i < b; ++i) {
    const Int& k = jac.snf.diagonal[i];
    if (k == 1) continue;
    RatVector g(b);
    for (std::size_t r = 0; r < b; ++r) g[r] = Rat(jac.snf.Q(r, i), k);
    for (auto& c : g) c.canonicalize();
    gens.push_back(JacobianElement::reduce(std::move(g)));
    orders.push_back(k.get_ui());
  }
  std::vector<JacobianElement> out{JacobianElement::reduce(RatVector(b))};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<JacobianElement> next;
    for (const auto& e : out) {
      JacobianElement acc = e;
      for (unsigned long n = 0; n < orders[i]; ++n) {
        next.push_back(acc);
        acc = acc + gens[i];
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace crystnet
