#include "crystnet/nets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace crystnet {

namespace {

IntMatrix integer_inverse(const IntMatrix& u) {
  auto inv = inverse(to_rational(u));
  if (!inv) throw Error(ErrorCode::Internal, "completion is not invertible");
  return to_integer(*inv);
}

RatVector edge_vector(const BuildingCochain& v, DirectedEdge e) {
  RatVector r = v.coords.row(e.edge);
  if (e.reversed)
    for (auto& x : r) x = -x;
  return r;
}

Eigen::MatrixXd to_float(const RatMatrix& m, const OrthonormalChart& chart) {
  Eigen::MatrixXd a(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return a * chart.float_transform;
}

}  // namespace

VanishingSummand VanishingSummand::make(const FiniteGraph& g, const IntLattice& h) {
  VanishingSummand vs;
  vs.graph = g;
  vs.basis = homology_basis(g);
  const std::size_t b = vs.basis.rank();
  if (h.ambient_dim() != b) throw Error(ErrorCode::DimensionMismatch, "H must live in Z^b1");
  if (!h.is_summand()) throw Error(ErrorCode::NotASummand, "H is not a direct summand of H1");
  if (h.rank() >= b) throw Error(ErrorCode::RankMismatch, "H must have rank below b1");
  vs.h = h;
  vs.d = b - h.rank();
  return vs;
}

VanishingSummand VanishingSummand::from_edge_cycles(const FiniteGraph& g, const std::vector<IntVector>& cycles) {
  HomologyBasis hb = homology_basis(g);
  IntMatrix gens(hb.rank(), cycles.size());
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    if (cycles[j].size() != g.edge_count()) throw Error(ErrorCode::DimensionMismatch, "cycle length must equal E");
    IntVector c = cycle_coordinates(g, hb, Chain1(to_rational(cycles[j])));
    for (std::size_t i = 0; i < c.size(); ++i) gens(i, j) = c[i];
  }
  IntLattice h = cycles.empty() ? IntLattice::zero(hb.rank()) : IntLattice::from_generators(gens);
  return make(g, h);
}

IntMatrix VanishingSummand::edge_generators() const { return basis.cycle_matrix() * h.basis(); }

OrthonormalChart orthonormal_chart(const RatMatrix& metric) {
  const std::size_t d = metric.rows();
  if (!is_positive_definite(metric)) throw Error(ErrorCode::DegeneratePeriodLattice, "metric is not positive definite");
  std::vector<RatVector> ortho = gram_schmidt(RatMatrix::identity(d).columns(), &metric);
  OrthonormalChart chart;
  chart.transform = RatMatrix(d, d);
  chart.scales.resize(d);
  chart.float_transform = Eigen::MatrixXd(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) {
    // q_k / sqrt(a_k) does not depend on the scale of q_k
    RatVector qk = to_rational(primitive_integer_vector(ortho[k]));
    RatVector mq = metric * qk;
    Rat a = dot(qk, mq);
    // a = p/q, p q = D s^2, so 1/sqrt(a) = q / (s sqrt(D))
    SquareFree sf = square_free_part(Int(a.get_num() * a.get_den()));
    Int q = a.get_den();
    chart.scales[k] = {sf.m, sf.D};
    const double denom = sf.m.get_d() * std::sqrt(sf.D.get_d());
    for (std::size_t i = 0; i < d; ++i) {
      chart.transform(i, k) = mq[i] * Rat(q);
      chart.float_transform(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          chart.transform(i, k).get_d() / denom;
    }
  }
  return chart;
}

RatMatrix BuildingCochain::gram() const { return coords * metric * coords.transpose(); }

Frame BuildingCochain::frame() const {
  OrthonormalChart chart = orthonormal_chart(metric);
  return Frame::exact(coords * chart.transform, chart.scales);
}

RatMatrix BuildingCochain::frame_operator() const { return coords.transpose() * coords * metric; }

RatMatrix resultant_force(const FiniteGraph& g, const BuildingCochain& v) {
  RatMatrix f(g.vertex_count(), v.dim());
  for (std::size_t x = 0; x < g.vertex_count(); ++x)
    for (DirectedEdge e : g.star(x)) {
      RatVector w = edge_vector(v, e);
      for (std::size_t k = 0; k < w.size(); ++k) f(x, k) += w[k];
    }
  return f;
}

BuildingCochain harmonic_cochain_v0(const FiniteGraph& g) {
  HomologyBasis hb = homology_basis(g);
  RatMatrix a = to_rational(hb.gram);
  auto ainv = inverse(a);
  if (!ainv) throw Error(ErrorCode::Internal, "cycle Gram matrix is singular");
  return {to_rational(hb.cycle_matrix()) * *ainv, a};
}

Realization realize(const FiniteGraph& g, const BuildingCochain& v) {
  if (v.coords.rows() != g.edge_count() || v.coords.cols() != v.dim())
    throw Error(ErrorCode::DimensionMismatch, "cochain needs one d-vector per edge");
  Realization r;
  r.graph = g;
  r.basis = homology_basis(g);
  r.cochain = v;
  const std::size_t b = r.basis.rank();
  const std::size_t d = v.dim();
  if (d == 0 || d > b) throw Error(ErrorCode::DegeneratePeriodLattice, "dimension must lie in 1..b1");
  OrthonormalChart chart = orthonormal_chart(v.metric);

  RatMatrix cyc = to_rational(r.basis.cycle_matrix());
  r.cycle_periods = cyc.transpose() * v.coords;
  IntMatrix ker = integer_kernel(r.cycle_periods.transpose());
  r.vanishing = ker.cols() == 0 ? IntLattice::zero(b) : IntLattice::from_generators(ker);
  if (r.vanishing.rank() != b - d)
    throw Error(ErrorCode::DegeneratePeriodLattice, "the periods do not form a rank-d lattice");
  IntMatrix u = unimodular_completion(r.vanishing);
  const std::size_t hr = r.vanishing.rank();
  r.period_lift = u.column_block(hr, d);
  r.mu = integer_inverse(u).transpose().column_block(hr, d).transpose();
  r.period_coords = to_rational(r.period_lift).transpose() * r.cycle_periods;
  r.period_gram = r.period_coords * v.metric * r.period_coords.transpose();
  r.vol_squared = determinant(r.period_gram);
  if (r.vol_squared == 0) throw Error(ErrorCode::DegeneratePeriodLattice, "period vectors are dependent");

  const std::size_t nv = g.vertex_count();
  r.positions = RatMatrix(nv, d);
  for (std::size_t x : r.basis.bfs_order) {
    const auto& pe = r.basis.parent[x];
    if (!pe) continue;
    RatVector w = edge_vector(v, *pe);
    std::size_t p = r.basis.parent_vertex[x];
    for (std::size_t k = 0; k < d; ++k) r.positions(x, k) = r.positions(p, k) + w[k];
  }

  r.edge_shift.resize(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    // closed walk: root -> o(e), then e, then t(e) -> root
    Chain1 c = path_chain(g, r.basis.root_path(g.edge(e).a));
    c.add({e, false}, 1);
    Chain1 back = path_chain(g, r.basis.root_path(g.edge(e).b));
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] -= back.coeffs[i];
    r.edge_shift[e] = r.mu * cycle_coordinates(g, r.basis, c);
  }

  r.float_positions = to_float(r.positions, chart);
  r.float_periods = to_float(r.period_coords, chart);
  r.float_bonds = to_float(v.coords, chart);
  return r;
}

PeriodHomomorphism standard_period_homomorphism(const VanishingSummand& vs) {
  const std::size_t b = vs.basis.rank();
  RatMatrix a = to_rational(vs.basis.gram);
  // Y spans the orthogonal complement of H in H1; coordinates of P(c) in Y
  RatMatrix y = vs.h.rank() == 0 ? RatMatrix::identity(b)
                                 : kernel_basis(to_rational(vs.h.basis()).transpose() * a);
  RatMatrix gy = y.transpose() * a * y;
  auto gyinv = inverse(gy);
  if (!gyinv) throw Error(ErrorCode::Internal, "complement Gram matrix is singular");
  return {*gyinv * y.transpose() * a, gy};
}

Realization standard_realization(const VanishingSummand& vs) {
  PeriodHomomorphism rho = standard_period_homomorphism(vs);
  // v(e) = P(v0(e)); in Y coordinates this is Gy^{-1} Yᵗ Cᵗ e = rho C A^{-1} e
  BuildingCochain v0 = harmonic_cochain_v0(vs.graph);
  BuildingCochain v{v0.coords * rho.period_hom.transpose(), rho.metric};
  return realize(vs.graph, v);
}

BuildingCochain harmonic_realization_from_force(const VanishingSummand& vs, const RatMatrix& period_hom,
                                                const RatMatrix& metric, const RatMatrix& force) {
  const FiniteGraph& g = vs.graph;
  const std::size_t b = vs.basis.rank();
  const std::size_t d = metric.rows();
  if (metric.cols() != d || period_hom.rows() != d || period_hom.cols() != b || force.rows() != g.vertex_count() ||
      force.cols() != d)
    throw Error(ErrorCode::DimensionMismatch, "period homomorphism, metric and force sizes disagree");
  for (std::size_t k = 0; k < d; ++k) {
    Rat s = 0;
    for (std::size_t x = 0; x < g.vertex_count(); ++x) s += force(x, k);
    if (s != 0) throw Error(ErrorCode::ForceNotBalanced, "the forces do not sum to zero");
  }
  IntMatrix ker = integer_kernel(period_hom);
  IntLattice killed = ker.cols() == 0 ? IntLattice::zero(b) : IntLattice::from_generators(ker);
  if (killed != vs.h) throw Error(ErrorCode::ClassKillsWrongSubgroup, "kernel of rho is not H");

  // harmonic part C A^{-1} rhoᵗ plus a coboundary adjoint part B^t a with L a = -f
  BuildingCochain v0 = harmonic_cochain_v0(g);
  RatMatrix coords = v0.coords * period_hom.transpose();
  const std::size_t nv = g.vertex_count();
  if (nv > 1) {
    RatMatrix lap = to_rational(laplacian(g));
    RatMatrix reduced(nv - 1, nv - 1), rhs(nv - 1, d);
    for (std::size_t i = 1; i < nv; ++i) {
      for (std::size_t j = 1; j < nv; ++j) reduced(i - 1, j - 1) = lap(i, j);
      for (std::size_t k = 0; k < d; ++k) rhs(i - 1, k) = -force(i, k);
    }
    RatMatrix pot = solve(reduced, rhs);
    RatMatrix full(nv, d);
    for (std::size_t i = 1; i < nv; ++i)
      for (std::size_t k = 0; k < d; ++k) full(i, k) = pot(i - 1, k);
    coords = coords + to_rational(incidence_matrix(g)).transpose() * full;
  }
  return {coords, metric};
}

Energy energy(const Realization& r) {
  if (r.vol_squared <= 0) throw Error(ErrorCode::DegeneratePeriodLattice, "period lattice has no volume");
  RatMatrix gram = r.cochain.gram();
  Energy out;
  for (std::size_t e = 0; e < gram.rows(); ++e) out.sum_sq += 2 * gram(e, e);
  out.vol_sq = r.vol_squared;
  const double d = static_cast<double>(r.cochain.dim());
  out.value = out.sum_sq.get_d() / std::pow(out.vol_sq.get_d(), 1.0 / d);
  return out;
}

Distortion distortion(const Realization& r) {
  Distortion out;
  out.force = resultant_force(r.graph, r.cochain);
  out.harmonic = out.force.is_zero();
  RatMatrix s = r.cochain.frame_operator();
  const std::size_t d = s.rows();
  Rat c = s(0, 0);
  out.tight = s == scaled(RatMatrix::identity(d), c);
  Eigen::MatrixXd f = r.float_bonds;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f.transpose() * f);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  out.ratio = out.tight ? 1.0 : (lo > 0 ? hi / lo : std::numeric_limits<double>::infinity());
  return out;
}

Rat torus_volume(const VanishingSummand& vs) {
  Int kappa = determinant(vs.basis.gram);
  Int hvol = covolume_squared(vs.h, &vs.basis.gram);
  Rat out(kappa, hvol);
  out.canonicalize();
  return out;
}

std::vector<PatchVertex> realize_patch(const Realization& r, std::size_t radius) {
  const std::size_t d = r.cochain.dim();
  const long rad = static_cast<long>(radius);
  std::vector<PatchVertex> out;
  std::vector<long> off(d, -rad);
  while (true) {
    IntVector offset(d);
    Eigen::VectorXd shift = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < d; ++k) {
      offset[k] = off[k];
      shift += static_cast<double>(off[k]) * r.float_periods.row(static_cast<Eigen::Index>(k)).transpose();
    }
    for (std::size_t x = 0; x < r.graph.vertex_count(); ++x) {
      PatchVertex pv;
      pv.vertex = x;
      pv.offset = offset;
      pv.position = r.float_positions.row(static_cast<Eigen::Index>(x)).transpose() + shift;
      for (DirectedEdge e : r.graph.star(x)) {
        PatchEdge pe;
        pe.edge = e;
        pe.target = r.graph.terminus(e);
        pe.target_offset = offset;
        const IntVector& s = r.edge_shift[e.edge];
        for (std::size_t k = 0; k < d; ++k) pe.target_offset[k] += e.reversed ? Int(-s[k]) : s[k];
        pv.edges.push_back(std::move(pe));
      }
      out.push_back(std::move(pv));
    }
    std::size_t k = d;
    while (k > 0 && off[k - 1] == rad) {
      off[k - 1] = -rad;
      --k;
    }
    if (k == 0) break;
    ++off[k - 1];
  }
  return out;
}

RealismReport realism_check(const Realization& r, std::size_t radius, double c) {
  RealismReport rep;
  RatMatrix gram = r.cochain.gram();
  for (std::size_t e = 0; e < gram.rows(); ++e)
    if (gram(e, e) == 0) rep.zero_edges.push_back(e);

  std::vector<PatchVertex> patch = realize_patch(r, radius);
  const long inner = static_cast<long>(radius) - 1;
  std::vector<double> reach(r.graph.vertex_count(), 0.0);
  for (std::size_t x = 0; x < reach.size(); ++x)
    for (DirectedEdge e : r.graph.star(x))
      reach[x] = std::max(reach[x], r.float_bonds.row(static_cast<Eigen::Index>(e.edge)).norm());

  for (std::size_t i = 0; i < patch.size(); ++i) {
    const PatchVertex& x = patch[i];
    bool interior = inner >= 0;
    for (const auto& o : x.offset) interior = interior && abs(o) <= inner;
    for (std::size_t j = 0; j < patch.size(); ++j) {
      if (i == j) continue;
      const PatchVertex& y = patch[j];
      const double dist = (x.position - y.position).norm();
      if (j > i && dist <= kFloatTolerance) rep.collisions.emplace_back(i, j);
      if (!interior || dist > c * reach[x.vertex] + kFloatTolerance) continue;
      bool adjacent = false;
      for (const auto& pe : x.edges) adjacent = adjacent || (pe.target == y.vertex && pe.target_offset == y.offset);
      if (!adjacent) rep.close_nonadjacent.emplace_back(i, j);
    }
  }
  return rep;
}

QuadricPoint2D quadric_point_2d(const Realization& r) {
  if (r.cochain.dim() != 2) throw Error(ErrorCode::NotTwoDimensional, "quadric points need d = 2");
  Frame f = r.cochain.frame();
  const auto& sc = f.scales();
  const RatMatrix& num = f.numerators();
  // z = n1/(m1 sqrt D1) + i n2/(m2 sqrt D2), times m1 sqrt D1:
  // n1 + n2 (m1 k / (m2 D2)) sqrt(-D) with D1 D2 = D k^2
  SquareFree sf = square_free_part(Int(sc[0].D * sc[1].D));
  Rat factor(sc[0].m * sf.m, sc[1].m * sc[1].D);
  factor.canonicalize();
  QuadricPoint2D out;
  out.D = sf.D;
  for (std::size_t e = 0; e < num.rows(); ++e) out.point.push_back({num(e, 0), num(e, 1) * factor, sf.D});
  std::size_t lead = 0;
  while (lead < out.point.size() && out.point[lead].is_zero()) ++lead;
  if (lead == out.point.size()) throw Error(ErrorCode::Internal, "all bond vectors vanish");
  SurdComplex s = out.point[lead];
  for (auto& z : out.point) z = z / s;
  for (const auto& z : out.point) out.conjugate.push_back(z.conjugate());
  for (const auto& z : out.point) {
    if (z.im == 0) continue;
    if (z.im < 0) std::swap(out.point, out.conjugate);
    break;
  }
  return out;
}

QuadricPoint2D quadric_point_2d(const VanishingSummand& vs) {
  if (vs.d != 2) throw Error(ErrorCode::NotTwoDimensional, "quadric points need d = 2");
  return quadric_point_2d(standard_realization(vs));
}

bool projectively_equal(const std::vector<SurdComplex>& a, const std::vector<SurdComplex>& b) {
  if (a.size() != b.size()) return false;
  std::size_t lead = 0;
  while (lead < a.size() && a[lead].is_zero()) ++lead;
  if (lead == a.size() || b[lead].is_zero()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] * b[lead] == b[i] * a[lead])) return false;
  return true;
}

CubicProjection cubic_projection(const IntVector& n) {
  if (n.size() != 3) throw Error(ErrorCode::DimensionMismatch, "cubic projection needs a 3-vector");
  if (content(n) != 1) throw Error(ErrorCode::NotPrimitive, "n must be a nonzero primitive vector");
  FiniteGraph g = FiniteGraph::build(1, {{"x", 0, 0}, {"y", 0, 0}, {"z", 0, 0}});
  CubicProjection out{VanishingSummand::from_edge_cycles(g, {n}), {}, q3_point(n), {}};
  out.realization = standard_realization(out.summand);
  out.point = quadric_point_2d(out.realization);
  return out;
}

}  // namespace crystnet
