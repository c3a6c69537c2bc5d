#include "crystnet/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace crystnet {

namespace {

double surd_value(const ColumnScale& s) { return s.m.get_d() * std::sqrt(s.D.get_d()); }

Rat column_norm_sq(const ColumnScale& s) { return Rat(s.m * s.m * s.D); }

void require_exact(const Frame& f, const char* what) {
  if (!f.is_exact()) throw Error(ErrorCode::InexactFrame, std::string(what) + " needs an exact frame");
}

std::size_t float_rank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(kFloatTolerance);
  return static_cast<std::size_t>(lu.rank());
}

Rat pow_rat(const Rat& x, std::size_t k) {
  Rat r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

Frame Frame::exact(RatMatrix numerators, std::vector<ColumnScale> scales) {
  if (scales.size() != numerators.cols())
    throw Error(ErrorCode::DimensionMismatch, "one column scale per coordinate");
  for (const auto& s : scales) {
    if (s.m <= 0) throw Error(ErrorCode::InvalidInput, "column scale m must be positive");
    if (s.D <= 0 || !is_square_free(s.D)) throw Error(ErrorCode::NotSquareFree, "column surd D must be square-free");
  }
  Frame f;
  f.size_ = numerators.rows();
  f.dim_ = numerators.cols();
  f.num_ = std::move(numerators);
  f.scales_ = std::move(scales);
  return f;
}

Frame Frame::rational(RatMatrix vectors) {
  std::vector<ColumnScale> s(vectors.cols());
  return exact(std::move(vectors), std::move(s));
}

Frame Frame::approximate(Eigen::MatrixXd vectors) {
  Frame f;
  f.size_ = static_cast<std::size_t>(vectors.rows());
  f.dim_ = static_cast<std::size_t>(vectors.cols());
  f.exact_ = false;
  f.approx_ = std::move(vectors);
  return f;
}

const RatMatrix& Frame::numerators() const {
  require_exact(*this, "numerators");
  return num_;
}

const std::vector<ColumnScale>& Frame::scales() const {
  require_exact(*this, "scales");
  return scales_;
}

Eigen::MatrixXd Frame::float_view() const {
  if (!exact_) return approx_;
  Eigen::MatrixXd m(size_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    double s = surd_value(scales_[k]);
    for (std::size_t i = 0; i < size_; ++i) m(i, k) = num_(i, k).get_d() / s;
  }
  return m;
}

RatMatrix Frame::gram() const {
  require_exact(*this, "gram");
  RatMatrix g(size_, size_);
  std::vector<Rat> inv(dim_);
  for (std::size_t k = 0; k < dim_; ++k) inv[k] = 1 / column_norm_sq(scales_[k]);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i; j < size_; ++j) {
      Rat s = 0;
      for (std::size_t k = 0; k < dim_; ++k) s += num_(i, k) * num_(j, k) * inv[k];
      g(i, j) = s;
      g(j, i) = s;
    }
  return g;
}

Eigen::MatrixXd Frame::float_gram() const {
  Eigen::MatrixXd a = float_view();
  return a * a.transpose();
}

Rat Frame::norm_squared(std::size_t i) const {
  require_exact(*this, "norm_squared");
  Rat s = 0;
  for (std::size_t k = 0; k < dim_; ++k) s += num_(i, k) * num_(i, k) / column_norm_sq(scales_[k]);
  return s;
}

Frame Frame::scaled_by_sqrt(const Rat& c) const {
  if (c <= 0) throw Error(ErrorCode::BadParameters, "scale must be positive");
  if (!exact_) return approximate(approx_ * std::sqrt(c.get_d()));
  const Int p = c.get_num(), q = c.get_den();
  RatMatrix num = num_;
  std::vector<ColumnScale> sc = scales_;
  // num/(m sqrt D) * sqrt(p/q) = (num s D' / (q D)) / (m sqrt D') with pqD = D' s^2
  for (std::size_t k = 0; k < dim_; ++k) {
    SquareFree sf = square_free_part(p * q * scales_[k].D);
    Rat factor(sf.m * sf.D, q * scales_[k].D);
    factor.canonicalize();
    for (std::size_t i = 0; i < size_; ++i) num(i, k) *= factor;
    sc[k].D = sf.D;
  }
  return exact(std::move(num), std::move(sc));
}

Frame Frame::with_vector_scaled(std::size_t i, const Rat& factor) const {
  if (i >= size_) throw Error(ErrorCode::InvalidInput, "vector index out of range");
  if (!exact_) {
    Eigen::MatrixXd m = approx_;
    m.row(static_cast<Eigen::Index>(i)) *= factor.get_d();
    return approximate(std::move(m));
  }
  RatMatrix num = num_;
  for (std::size_t k = 0; k < dim_; ++k) num(i, k) *= factor;
  return exact(std::move(num), scales_);
}

Frame Frame::reordered(const std::vector<std::size_t>& order) const {
  if (order.size() != size_) throw Error(ErrorCode::DimensionMismatch, "order length");
  if (!exact_) {
    Eigen::MatrixXd m(approx_.rows(), approx_.cols());
    for (std::size_t i = 0; i < size_; ++i)
      m.row(static_cast<Eigen::Index>(i)) = approx_.row(static_cast<Eigen::Index>(order.at(i)));
    return approximate(std::move(m));
  }
  RatMatrix num(size_, dim_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) num(i, k) = num_(order.at(i), k);
  return exact(std::move(num), scales_);
}

FrameOperatorData frame_operator(const Frame& f) {
  FrameOperatorData out;
  const std::size_t d = f.dim();
  Eigen::MatrixXd a = f.float_view();
  out.s_float = a.transpose() * a;
  out.gram_float = a * a.transpose();
  out.approximate = !f.is_exact();
  if (f.is_exact()) {
    const RatMatrix& num = f.numerators();
    if (rank(num) != d) throw Error(ErrorCode::NotAFrame, "vectors do not span");
    out.scales = f.scales();
    out.s_numerators = num.transpose() * num;
    out.gram = f.gram();
    out.trace = 0;
    std::vector<Rat> diag(d);
    for (std::size_t k = 0; k < d; ++k) {
      diag[k] = out.s_numerators(k, k) / column_norm_sq(out.scales[k]);
      out.trace += diag[k];
    }
    bool tight = true;
    for (std::size_t k = 0; k < d && tight; ++k) {
      if (diag[k] != diag[0]) tight = false;
      for (std::size_t l = 0; l < d; ++l)
        if (k != l && out.s_numerators(k, l) != 0) tight = false;
    }
    if (tight && d > 0) {
      out.tight_constant = diag[0];
      out.tight_constant_float = diag[0].get_d();
    }
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.s_float);
  if (d == 0 || es.eigenvalues().minCoeff() <= kFloatTolerance)
    throw Error(ErrorCode::NotAFrame, "vectors do not span");
  double alpha = out.s_float.trace() / static_cast<double>(d);
  Eigen::MatrixXd diff = out.s_float - alpha * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  if (diff.cwiseAbs().maxCoeff() <= kFloatTolerance) out.tight_constant_float = alpha;
  return out;
}

std::optional<TightConstant> is_tight(const Frame& f) {
  FrameOperatorData op;
  try {
    op = frame_operator(f);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotAFrame) return std::nullopt;
    throw;
  }
  if (!op.tight_constant_float) return std::nullopt;
  TightConstant t;
  t.value = *op.tight_constant_float;
  t.exact = op.tight_constant;
  if (t.exact && *t.exact == 1 && op.trace != Rat(static_cast<long>(f.dim())))
    throw Error(ErrorCode::Internal, "1-tight frame with trace != d");
  return t;
}

bool naimark_check(const Frame& f) {
  if (f.is_exact()) {
    RatMatrix g = f.gram();
    return g * g == g && rank(g) == f.dim();
  }
  Eigen::MatrixXd g = f.float_gram();
  return (g * g - g).cwiseAbs().maxCoeff() <= kFloatTolerance && float_rank(g) == f.dim();
}

bool congruent(const Frame& a, const Frame& b) {
  if (a.size() != b.size() || a.dim() != b.dim())
    throw Error(ErrorCode::DimensionMismatch, "frames differ in size or dimension");
  if (a.is_exact() && b.is_exact()) return a.gram() == b.gram();
  return (a.float_gram() - b.float_gram()).cwiseAbs().maxCoeff() <= kFloatTolerance;
}

std::optional<Rat> recognize_rational(double x, long max_denominator, double tolerance) {
  if (!std::isfinite(x)) return std::nullopt;
  const bool neg = x < 0;
  double r = std::fabs(x);
  // convergents h/k of the continued fraction of r
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rest = r;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(rest);
    if (a > 1e15) break;
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_denominator) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::fabs(r - static_cast<double>(h1) / static_cast<double>(k1)) <= tolerance) {
      Rat q(h1, k1);
      q.canonicalize();
      return neg ? Rat(-q) : q;
    }
    double frac = rest - a;
    if (frac <= 0) break;
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

std::optional<RatMatrix> essentially_rational_gram(const Frame& f) {
  if (f.is_exact()) return f.gram();
  Eigen::MatrixXd g = f.float_gram();
  const double lambda = g.cwiseAbs().maxCoeff();
  if (lambda <= kFloatTolerance) return std::nullopt;
  RatMatrix out(f.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) {
      auto r = recognize_rational(g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) / lambda);
      if (!r) return std::nullopt;
      out(i, j) = *r;
    }
  return out;
}

bool is_crystallographic(const Frame& f) { return essentially_rational_gram(f).has_value(); }

IntLattice vanishing_group(const Frame& f) {
  auto g = essentially_rational_gram(f);
  if (!g) throw Error(ErrorCode::NotCrystallographic, "Gram matrix is not essentially rational");
  IntMatrix k = integer_kernel(*g);
  if (k.cols() == 0) return IntLattice::zero(f.size());
  return IntLattice::from_generators(k);
}

PeriodLattice period_lattice(const Frame& f) {
  require_exact(f, "period_lattice");
  IntLattice h = vanishing_group(f);
  IntMatrix u = unimodular_completion(h);
  PeriodLattice out;
  out.lift = u.column_block(h.rank(), f.size() - h.rank());
  RatMatrix l = to_rational(out.lift);
  out.gram = l.transpose() * f.gram() * l;
  out.vol_squared = determinant(out.gram);
  return out;
}

Frame frame_from_summand(const IntLattice& h, std::size_t n, std::size_t d) {
  if (h.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "summand lives in a different Z^N");
  if (!h.is_summand()) throw Error(ErrorCode::NotASummand, "H is not a direct summand");
  if (h.rank() + d != n) throw Error(ErrorCode::RankMismatch, "rank(H) must equal N - d");
  RatMatrix comp = h.rank() == 0 ? RatMatrix::identity(n) : kernel_basis(to_rational(h.basis().transpose()));
  std::vector<RatVector> ortho = gram_schmidt(comp.columns());
  if (ortho.size() != d) throw Error(ErrorCode::Internal, "complement has wrong dimension");
  RatMatrix num(n, d);
  std::vector<ColumnScale> scales(d);
  for (std::size_t k = 0; k < d; ++k) {
    IntVector v = primitive_integer_vector(ortho[k]);
    SquareFree sf = square_free_part(dot(v, v));
    scales[k] = {sf.m, sf.D};
    for (std::size_t i = 0; i < n; ++i) num(i, k) = v[i];
  }
  return Frame::exact(std::move(num), std::move(scales));
}

EnergyGap minimal_energy_gap(const Frame& f) {
  require_exact(f, "minimal_energy_gap");
  RatMatrix g = f.gram();
  Rat tr = 0;
  for (std::size_t i = 0; i < f.size(); ++i) tr += g(i, i);
  PeriodLattice per = period_lattice(f);
  IntLattice h = vanishing_group(f);
  EnergyGap out;
  const std::size_t d = f.dim();
  out.lhs_pow_d = pow_rat(tr, d);
  out.rhs = pow_rat(Rat(static_cast<long>(d)), d) * per.vol_squared * Rat(covolume_squared(h));
  out.equality = out.lhs_pow_d == out.rhs;
  return out;
}

Frame join(const Frame& a, const Frame& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "join needs frames of equal dimension");
  const std::size_t d = a.dim();
  bool exact = a.is_exact() && b.is_exact();
  if (exact)
    for (std::size_t k = 0; k < d; ++k)
      if (a.scales()[k].D != b.scales()[k].D) exact = false;
  if (!exact) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(a.size() + b.size()), static_cast<Eigen::Index>(d));
    m << a.float_view(), b.float_view();
    return Frame::approximate(std::move(m));
  }
  RatMatrix num(a.size() + b.size(), d);
  for (std::size_t k = 0; k < d; ++k) {
    Rat ratio(a.scales()[k].m, b.scales()[k].m);
    ratio.canonicalize();
    for (std::size_t i = 0; i < a.size(); ++i) num(i, k) = a.numerators()(i, k);
    for (std::size_t i = 0; i < b.size(); ++i) num(a.size() + i, k) = b.numerators()(i, k) * ratio;
  }
  return Frame::exact(std::move(num), a.scales());
}

bool join_is_crystallographic(const Frame& a, const Frame& b) { return is_crystallographic(join(a, b)); }

AutomorphismData automorphism_group(const Frame& f, std::size_t max_size) {
  require_exact(f, "automorphism_group");
  const std::size_t n = f.size();
  if (n > max_size) throw Error(ErrorCode::SizeTooLarge, "permutation scan limited to N <= " + std::to_string(max_size));
  RatMatrix g = f.gram();
  Int l = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int row = lcm_of_denominators(g.row(i));
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row.get_mpz_t());
  }
  IntMatrix w = integer_kernel(g);
  auto to_long = [](const Int& x) {
    if (!x.fits_slong_p()) throw Error(ErrorCode::SizeTooLarge, "entries too large for the permutation scan");
    return x.get_si();
  };
  std::vector<std::vector<long>> gi(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat s = g(i, j) * l;
      gi[i][j] = to_long(s.get_num());
    }
  std::vector<std::vector<long>> wi(w.cols(), std::vector<long>(n));
  for (std::size_t c = 0; c < w.cols(); ++c)
    for (std::size_t i = 0; i < n; ++i) wi[c][i] = to_long(w(i, c));

  AutomorphismData out;
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<long> moved(n);
  std::size_t total = 0;
  do {
    ++total;
    bool ok = true;
    for (std::size_t c = 0; c < wi.size() && ok; ++c) {
      for (std::size_t i = 0; i < n; ++i) moved[sigma[i]] = wi[c][i];
      for (std::size_t r = 0; r < n && ok; ++r) {
        long s = 0;
        for (std::size_t j = 0; j < n; ++j) s += gi[r][j] * moved[j];
        if (s != 0) ok = false;
      }
    }
    if (ok) out.permutations.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::vector<bool> reached(n, false);
  for (const auto& p : out.permutations)
    if (n > 0) reached[p[0]] = true;
  out.isotropic = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
  out.strongly_isotropic = out.permutations.size() == total;
  return out;
}

// ---- catalog ----

Frame hexagonal_frame(const RatMatrix& coords) {
  if (coords.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "hexagonal coordinates are pairs");
  RatMatrix num(coords.rows(), 2);
  for (std::size_t i = 0; i < coords.rows(); ++i) {
    num(i, 0) = coords(i, 0) - coords(i, 1) / 2;
    num(i, 1) = 3 * coords(i, 1);
  }
  return Frame::exact(std::move(num), {ColumnScale{1, 1}, ColumnScale{2, 3}});
}

Frame polygon_frame(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::BadParameters, "polygon needs at least 3 vertices");
  if (n == 3) return hexagonal_frame(RatMatrix{{1, 0}, {0, 1}, {-1, -1}});
  if (n == 4) return Frame::rational(RatMatrix{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  if (n == 6) return hexagonal_frame(RatMatrix{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), 2);
  for (std::size_t k = 0; k < n; ++k) {
    double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
    m(static_cast<Eigen::Index>(k), 0) = std::cos(t);
    m(static_cast<Eigen::Index>(k), 1) = std::sin(t);
  }
  return Frame::approximate(std::move(m));
}

Frame simplex_frame(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::BadParameters, "simplex dimension must be >= 1");
  IntMatrix ones(d + 1, 1);
  for (std::size_t i = 0; i <= d; ++i) ones(i, 0) = 1;
  return frame_from_summand(IntLattice::from_generators(ones), d + 1, d);
}

namespace {

// Integer vectors in the sum-zero hyperplane of R^{d+1}, written in the
// orthonormal basis used by simplex_frame(d).
Frame in_sum_zero_coordinates(const std::vector<IntVector>& vecs, std::size_t d) {
  Frame basis = simplex_frame(d);
  const RatMatrix& b = basis.numerators();
  RatMatrix num(vecs.size(), d);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t k = 0; k < d; ++k) {
      Rat s = 0;
      for (std::size_t j = 0; j <= d; ++j) s += Rat(vecs[i][j]) * b(j, k);
      num(i, k) = s;
    }
  return Frame::exact(std::move(num), basis.scales());
}

IntVector unit(std::size_t n, std::size_t i, long c = 1) {
  IntVector v(n);
  v[i] = c;
  return v;
}

IntVector combo(std::size_t n, std::size_t i, long a, std::size_t j, long b) {
  IntVector v(n);
  v[i] += a;
  v[j] += b;
  return v;
}

Frame rows_to_frame(const std::vector<IntVector>& rows, std::size_t d) {
  RatMatrix m(rows.size(), d);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < d; ++k) m(i, k) = rows[i][k];
  return Frame::rational(std::move(m));
}

}  // namespace

Frame root_system_frame(char family, std::size_t r) {
  std::vector<IntVector> roots;
  switch (family) {
    case 'A': {
      if (r < 1) throw Error(ErrorCode::BadParameters, "A_d needs d >= 1");
      for (std::size_t i = 0; i <= r; ++i)
        for (std::size_t j = i + 1; j <= r; ++j) roots.push_back(combo(r + 1, i, 1, j, -1));
      return in_sum_zero_coordinates(roots, r);
    }
    case 'B':
    case 'C':
    case 'D': {
      std::size_t min_rank = family == 'B' ? 2 : (family == 'C' ? 3 : 4);
      if (r < min_rank)
        throw Error(ErrorCode::BadParameters, std::string(1, family) + "_d needs d >= " + std::to_string(min_rank));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
          roots.push_back(combo(r, i, 1, j, -1));
          roots.push_back(combo(r, i, 1, j, 1));
        }
      if (family == 'B')
        for (std::size_t i = 0; i < r; ++i) roots.push_back(unit(r, i));
      if (family == 'C')
        for (std::size_t i = 0; i < r; ++i) roots.push_back(unit(r, i, 2));
      return rows_to_frame(roots, r);
    }
    default:
      throw Error(ErrorCode::BadParameters, std::string("unknown root system family ") + family);
  }
}

Frame g2_frame() {
  std::vector<IntVector> roots = {
      {1, -1, 0}, {-1, 0, 1}, {0, -1, 1},  // short
      {-2, 1, 1}, {1, -2, 1}, {-1, -1, 2},  // long
  };
  return in_sum_zero_coordinates(roots, 2);
}

Frame pythagorean_frame(const Int& x, const Int& y, const Int& z) {
  if (x <= 0 || y <= 0 || z <= 0 || x * x + y * y != z * z)
    throw Error(ErrorCode::NotPythagorean, "need positive x, y, z with x^2 + y^2 = z^2");
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g != 1) throw Error(ErrorCode::NotPythagorean, "triple is not primitive");
  Rat p(x, z), q(y, z);
  p.canonicalize();
  q.canonicalize();
  return Frame::rational(RatMatrix{{1, 0}, {p, q}, {0, 1}, {-q, p}});
}

Frame tetrahedron_frame() {
  RatMatrix num{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  return Frame::exact(std::move(num), {ColumnScale{1, 3}, ColumnScale{1, 3}, ColumnScale{1, 3}});
}

Frame cube_frame() {
  RatMatrix num(8, 3);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t k = 0; k < 3; ++k) num(i, k) = (i >> (2 - k)) & 1 ? -1 : 1;
  return Frame::exact(std::move(num), {ColumnScale{1, 3}, ColumnScale{1, 3}, ColumnScale{1, 3}});
}

Frame octahedron_frame() {
  return Frame::rational(RatMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
}

namespace {

std::size_t parse_size(const std::string& s) {
  Int v = parse_integer(s);
  if (v < 0 || !v.fits_ulong_p()) throw Error(ErrorCode::BadParameters, "bad size " + s);
  return v.get_ui();
}

}  // namespace

Frame catalog_frame(const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  try {
    if (arg.empty()) {
      if (head == "triangle") return polygon_frame(3);
      if (head == "square") return polygon_frame(4);
      if (head == "pentagon") return polygon_frame(5);
      if (head == "hexagon") return polygon_frame(6);
      if (head == "octagon") return polygon_frame(8);
      if (head == "G2") return g2_frame();
      if (head == "tetrahedron") return tetrahedron_frame();
      if (head == "cube") return cube_frame();
      if (head == "octahedron") return octahedron_frame();
    } else {
      if (head == "polygon") return polygon_frame(parse_size(arg));
      if (head == "simplex") return simplex_frame(parse_size(arg));
      if (head.size() == 1 && std::string("ABCD").find(head[0]) != std::string::npos)
        return root_system_frame(head[0], parse_size(arg));
      if (head == "pythagorean") {
        std::vector<Int> t;
        std::size_t start = 0;
        while (start <= arg.size()) {
          auto comma = arg.find(',', start);
          t.push_back(parse_integer(arg.substr(start, comma - start)));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        if (t.size() != 3) throw Error(ErrorCode::BadParameters, "pythagorean needs x,y,z");
        return pythagorean_frame(t[0], t[1], t[2]);
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw Error(ErrorCode::BadParameters, e.what());
    throw;
  }
  throw Error(ErrorCode::BadParameters, "unknown catalog frame '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"triangle", "square",   "hexagon", "pentagon",          "octagon", "simplex:2",  "simplex:3",
          "A:2",      "A:3",      "B:2",     "B:3",               "C:3",     "D:4",        "G2",
          "pythagorean:3,4,5",    "pythagorean:5,12,13",         "tetrahedron",          "cube",
          "octahedron"};
}

}  // namespace crystnet
