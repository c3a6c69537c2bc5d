#include "crystnet/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace crystnet {

namespace {

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  // column dst -= q * column src
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  // row dst -= q * row src
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void negate_col(IntMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  // column-major comparison; shapes are equal for lattices of equal rank
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

}  // namespace

Int AbelianInvariants::order() const {
  if (free_rank > 0) throw Error(ErrorCode::InvalidInput, "infinite group has no finite order");
  Int o = 1;
  for (const auto& k : factors) o *= k;
  return o;
}

std::vector<Int> AbelianInvariants::nontrivial() const {
  std::vector<Int> out;
  for (const auto& k : factors)
    if (k != 1) out.push_back(k);
  return out;
}

bool AbelianInvariants::isomorphic(const AbelianInvariants& other) const {
  return free_rank == other.free_rank && nontrivial() == other.nontrivial();
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "," : "") << factors[i].get_str();
  os << ")";
  if (free_rank) os << " + Z^" << free_rank;
  return os.str();
}

HnfResult hnf(const IntMatrix& m) {
  HnfResult r;
  r.H = m;
  r.U = IntMatrix::identity(m.cols());
  const std::size_t n = m.cols();
  std::size_t c = 0;
  for (std::size_t i = 0; i < m.rows() && c < n; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = c; j < n; ++j) {
        if (r.H(i, j) == 0) continue;
        if (best == n || abs(r.H(i, j)) < abs(r.H(i, best))) best = j;
      }
      if (best == n) break;
      r.H.swap_columns(c, best);
      r.U.swap_columns(c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (r.H(i, j) == 0) continue;
        Int q = tdiv(r.H(i, j), r.H(i, c));
        col_axpy(r.H, j, c, q);
        col_axpy(r.U, j, c, q);
        if (r.H(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (r.H(i, c) == 0) continue;
    if (r.H(i, c) < 0) {
      negate_col(r.H, c);
      negate_col(r.U, c);
    }
    for (std::size_t l = 0; l < c; ++l) {
      Int q = fdiv(r.H(i, l), r.H(i, c));
      col_axpy(r.H, l, c, q);
      col_axpy(r.U, l, c, q);
    }
    ++c;
  }
  r.rank = c;
  return r;
}

SnfResult snf(const IntMatrix& a) {
  SnfResult r;
  const std::size_t m = a.rows(), n = a.cols();
  r.D = a;
  r.P = IntMatrix::identity(m);
  r.P_inverse = IntMatrix::identity(m);
  r.Q = IntMatrix::identity(n);
  IntMatrix& D = r.D;
  const std::size_t lim = std::min(m, n);

  auto row_op = [&](std::size_t dst, std::size_t src, const Int& q) {
    // row dst -= q row src; the inverse update adds q * column dst to column src
    row_axpy(D, dst, src, q);
    row_axpy(r.P, dst, src, q);
    col_axpy(r.P_inverse, src, dst, -q);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {
    col_axpy(D, dst, src, q);
    col_axpy(r.Q, dst, src, q);
  };

  for (std::size_t t = 0; t < lim; ++t) {
    while (true) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (bi == m || abs(D(i, j)) < abs(D(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m) break;
      D.swap_rows(t, bi);
      r.P.swap_rows(t, bi);
      r.P_inverse.swap_columns(t, bi);
      D.swap_columns(t, bj);
      r.Q.swap_columns(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        row_op(i, t, tdiv(D(i, t), D(t, t)));
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        col_op(j, t, tdiv(D(t, j), D(t, t)));
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            row_op(t, i, -1);  // row t += row i
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(r.P, t);
      negate_col(r.P_inverse, t);
    }
  }
  r.diagonal.resize(lim);
  for (std::size_t t = 0; t < lim; ++t) r.diagonal[t] = D(t, t);
  return r;
}

AbelianInvariants SnfResult::cokernel() const {
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (const auto& k : diagonal)
    if (k != 0) {
      inv.factors.push_back(k);
      ++nonzero;
    }
  inv.free_rank = D.rows() - nonzero;
  return inv;
}

IntLattice IntLattice::from_generators(const IntMatrix& generators) {
  HnfResult h = hnf(generators);
  IntLattice l;
  l.ambient_ = generators.rows();
  l.basis_ = h.H.column_block(0, h.rank);
  if (h.rank == 0) {
    l.summand_ = true;
  } else {
    SnfResult s = snf(l.basis_);
    l.summand_ = std::all_of(s.diagonal.begin(), s.diagonal.end(), [](const Int& k) { return k == 1; });
  }
  return l;
}

IntLattice IntLattice::zero(std::size_t ambient_dim) {
  IntLattice l;
  l.ambient_ = ambient_dim;
  l.basis_ = IntMatrix(ambient_dim, 0);
  l.summand_ = true;
  return l;
}

IntLattice IntLattice::full(std::size_t ambient_dim) {
  return from_generators(IntMatrix::identity(ambient_dim));
}

bool IntLattice::contains(const IntVector& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector length");
  IntMatrix g = hconcat(basis_, IntMatrix::from_columns(ambient_, {v}));
  return IntLattice::from_generators(g) == *this;
}

IntLattice saturate(const IntLattice& l) {
  if (l.rank() == 0) return l;
  SnfResult s = snf(l.basis());
  return IntLattice::from_generators(s.P_inverse.column_block(0, l.rank()));
}

IntMatrix lattice_gram(const IntLattice& l, const IntMatrix* form) {
  const IntMatrix& b = l.basis();
  if (form) {
    if (form->rows() != l.ambient_dim() || form->cols() != l.ambient_dim())
      throw Error(ErrorCode::DimensionMismatch, "form size");
    return b.transpose() * (*form) * b;
  }
  return b.transpose() * b;
}

AbelianInvariants dual_quotient(const IntLattice& h, const IntMatrix* form) {
  if (h.rank() == 0) return {};
  IntMatrix g = lattice_gram(h, form);
  if (determinant(g) == 0) throw Error(ErrorCode::NotFullColumnRank, "degenerate Gram matrix");
  return snf(g).cokernel();
}

Int covolume_squared(const IntLattice& h, const IntMatrix* form) {
  if (h.rank() == 0) return 1;
  Int d = determinant(lattice_gram(h, form));
  if (d == 0) throw Error(ErrorCode::NotFullColumnRank, "degenerate Gram matrix");
  return d;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  HnfResult h = hnf(m);
  return h.U.column_block(h.rank, m.cols() - h.rank);
}

IntMatrix integer_kernel(const RatMatrix& m) {
  IntMatrix im(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntVector row = primitive_integer_vector(m.row(i));
    for (std::size_t j = 0; j < m.cols(); ++j) im(i, j) = row[j];
  }
  return integer_kernel(im);
}

IntLattice orth_complement_int(const IntLattice& h) {
  if (h.rank() == 0) return IntLattice::full(h.ambient_dim());
  return IntLattice::from_generators(integer_kernel(h.basis().transpose()));
}

IntMatrix unimodular_completion(const IntLattice& h) {
  if (!h.is_summand()) throw Error(ErrorCode::NotASummand, "lattice is not a direct summand");
  if (h.rank() == 0) return IntMatrix::identity(h.ambient_dim());
  return snf(h.basis()).P_inverse;
}

namespace {

// Fincke–Pohst enumeration of nonzero x with xᵗQx <= bound and first
// nonzero coordinate positive.
std::vector<IntVector> short_vectors(const IntMatrix& q, const Int& bound, std::size_t cap) {
  const std::size_t n = q.rows();
  std::vector<std::vector<double>> c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = q(i, j).get_d();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      c[j][i] = c[i][j];
      c[i][j] = c[i][j] / c[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) c[k][l] -= c[k][i] * c[i][l];
  }
  const double t = bound.get_d() * (1.0 + 1e-9) + 1e-9;
  std::vector<IntVector> out;
  std::vector<long> x(n, 0);
  std::vector<double> rem(n + 1, 0.0);
  rem[n] = t;

  // Recursive descent from the last coordinate.
  auto rec = [&](auto&& self, std::size_t level) -> void {
    const std::size_t i = level - 1;
    double center = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) center += c[i][j] * static_cast<double>(x[j]);
    const double r = rem[i + 1] / c[i][i];
    if (r < 0) return;
    const double w = std::sqrt(r);
    const long lo = static_cast<long>(std::ceil(-center - w - 1e-9));
    const long hi = static_cast<long>(std::floor(-center + w + 1e-9));
    for (long v = lo; v <= hi; ++v) {
      x[i] = v;
      const double y = static_cast<double>(v) + center;
      rem[i] = rem[i + 1] - c[i][i] * y * y;
      if (rem[i] < -1e-7) continue;
      if (i == 0) {
        std::size_t first = 0;
        while (first < n && x[first] == 0) ++first;
        if (first == n || x[first] < 0) continue;
        IntVector xv(n);
        for (std::size_t k = 0; k < n; ++k) xv[k] = x[k];
        Int val = 0;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) val += xv[a] * q(a, b) * xv[b];
        if (val <= bound) {
          out.push_back(std::move(xv));
          if (out.size() > cap) throw Error(ErrorCode::BoundTooLarge, "too many candidate vectors");
        }
      } else {
        self(self, i);
      }
    }
    x[i] = 0;
  };
  if (n > 0) rec(rec, n);
  return out;
}

Int quad(const IntVector& x, const IntMatrix& q) {
  Int val = 0;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    Int row = 0;
    for (std::size_t b = 0; b < x.size(); ++b) row += q(a, b) * x[b];
    val += x[a] * row;
  }
  return val;
}

// Square of a constant C_k such that every rank-k lattice has a basis with
// prod |b_i| <= C_k * covolume. For k <= 4 a basis realizing the successive
// minima exists and Minkowski's second theorem gives C_k = gamma_k^{k/2};
// beyond that use |b_i| <= max(1, i/2) lambda_i and gamma_k <= 1 + k/4.
Rat basis_product_constant_sq(std::size_t k) {
  switch (k) {
    case 0:
    case 1: return 1;
    case 2: return Rat(4, 3);
    case 3: return 2;
    case 4: return 4;
    default: break;
  }
  Rat c = 1;
  for (std::size_t i = 1; i <= k; ++i)
    if (i > 2) c *= Rat(static_cast<long>(i * i), 4);
  Rat g = Rat(static_cast<long>(4 + k), 4);
  for (std::size_t i = 0; i < k; ++i) c *= g;
  return c;
}

struct SummandKey {
  Int vol_sq;
  IntMatrix basis;
  bool operator<(const SummandKey& o) const {
    if (vol_sq != o.vol_sq) return vol_sq < o.vol_sq;
    return lex_less(basis, o.basis);
  }
};

}  // namespace

std::vector<IntLattice> enumerate_summands(std::size_t n, std::size_t rank, const Rat& height_sq_bound,
                                           const EnumerationOptions& options) {
  if (rank > n) throw Error(ErrorCode::BadParameters, "rank exceeds ambient dimension");
  const IntMatrix identity = IntMatrix::identity(n);
  const IntMatrix& q = options.form ? *options.form : identity;
  if (q.rows() != n || q.cols() != n) throw Error(ErrorCode::DimensionMismatch, "form size");
  if (!is_positive_definite(to_rational(q))) throw Error(ErrorCode::BadParameters, "form not positive definite");

  Int bound;
  mpz_fdiv_q(bound.get_mpz_t(), height_sq_bound.get_num_mpz_t(), height_sq_bound.get_den_mpz_t());
  std::vector<IntLattice> out;
  if (bound < 1) return out;

  if (rank == 0) {
    out.push_back(IntLattice::zero(n));
    return out;
  }
  if (rank == n) {
    if (determinant(q) <= bound) out.push_back(IntLattice::full(n));
    return out;
  }

  // For the standard form, complements are a covolume-preserving bijection
  // between summands of rank k and n - k.
  if (!options.form && 2 * rank > n) {
    std::vector<IntLattice> dual = enumerate_summands(n, n - rank, height_sq_bound, options);
    std::map<SummandKey, IntLattice> sorted;
    for (const auto& h : dual) {
      IntLattice c = orth_complement_int(h);
      sorted.emplace(SummandKey{covolume_squared(c), c.basis()}, c);
    }
    for (auto& [k, v] : sorted) out.push_back(std::move(v));
    return out;
  }

  // Under a form A, H <-> its annihilator H° (standard complement) is again a
  // bijection, with det_A(H) = det(A) det_{A^-1}(H°). With the integral
  // adjugate form this reads h^2(H) = det_adj(H°) / det(A)^(d-1), d = n - rank.
  if (options.form && options.allow_dual && 2 * rank > n) {
    const std::size_t d = n - rank;
    const Int det_q = determinant(q);
    auto inv = inverse(to_rational(q));
    IntMatrix adj = to_integer(scaled(*inv, Rat(det_q)));
    Int scale = 1;
    for (std::size_t i = 0; i + 1 < d; ++i) scale *= det_q;
    EnumerationOptions dual_opt = options;
    dual_opt.form = &adj;
    std::map<SummandKey, IntLattice> sorted;
    for (const auto& h : enumerate_summands(n, d, Rat(bound * scale), dual_opt)) {
      IntLattice c = orth_complement_int(h);
      Int vs = covolume_squared(c, &q);
      if (vs * scale != covolume_squared(h, &adj))
        throw Error(ErrorCode::Internal, "complementary covolume identity failed");
      if (vs <= bound) sorted.emplace(SummandKey{vs, c.basis()}, c);
    }
    for (auto& [k, v] : sorted) out.push_back(std::move(v));
    return out;
  }

  std::map<SummandKey, IntLattice> found;
  if (rank == 1) {
    for (auto& v : short_vectors(q, bound, options.max_candidates)) {
      if (content(v) != 1) continue;
      IntLattice l = IntLattice::from_generators(IntMatrix::from_columns(n, {v}));
      found.emplace(SummandKey{quad(v, q), l.basis()}, l);
      if (found.size() > options.max_results) throw Error(ErrorCode::BoundTooLarge, "too many summands");
    }
  } else {
    const Rat cap_sq = basis_product_constant_sq(rank) * Rat(bound);
    Int cand_bound;
    mpz_fdiv_q(cand_bound.get_mpz_t(), cap_sq.get_num_mpz_t(), cap_sq.get_den_mpz_t());
    std::vector<IntVector> cands;
    std::vector<Int> norms;
    {
      std::vector<std::pair<Int, IntVector>> tmp;
      for (auto& v : short_vectors(q, cand_bound, options.max_candidates))
        if (content(v) == 1) tmp.emplace_back(quad(v, q), std::move(v));
      std::stable_sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [nv, v] : tmp) {
        norms.push_back(nv);
        cands.push_back(std::move(v));
      }
    }
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t start, const Rat& product) -> void {
      const std::size_t left = rank - chosen.size();
      for (std::size_t i = start; i < cands.size(); ++i) {
        Rat next = product;
        for (std::size_t r = 0; r < left; ++r) next *= Rat(norms[i]);
        if (next > cap_sq) break;  // norms are sorted, later choices only grow
        chosen.push_back(i);
        std::vector<IntVector> cols;
        for (auto c : chosen) cols.push_back(cands[c]);
        IntMatrix g = IntMatrix::from_columns(n, cols);
        if (crystnet::rank(g) == g.cols()) {
          if (chosen.size() == rank) {
            IntLattice s = saturate(IntLattice::from_generators(g));
            Int vs = covolume_squared(s, &q);
            if (vs <= bound) {
              found.emplace(SummandKey{vs, s.basis()}, s);
              if (found.size() > options.max_results)
                throw Error(ErrorCode::BoundTooLarge, "too many summands");
            }
          } else {
            self(self, i + 1, product * Rat(norms[i]));
          }
        }
        chosen.pop_back();
      }
    };
    rec(rec, 0, Rat(1));
  }
  for (auto& [k, v] : found) out.push_back(std::move(v));
  return out;
}

std::uint64_t ball_point_count(std::size_t n, std::uint64_t r2) {
  auto isqrt = [](std::uint64_t v) {
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
  };
  if (n == 0) return 1;
  if (n == 1) return 2 * isqrt(r2) + 1;
  const std::uint64_t r = isqrt(r2);
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x <= r; ++x) {
    std::uint64_t c = ball_point_count(n - 1, r2 - x * x);
    total += (x == 0) ? c : 2 * c;
  }
  return total;
}

std::uint64_t count_rank1_summands(std::size_t n, std::uint64_t height_sq_bound) {
  if (n == 0) return 0;
  std::uint64_t lim = 1;
  while ((lim + 1) * (lim + 1) <= height_sq_bound) ++lim;
  // Möbius function by sieve.
  std::vector<int> mu(lim + 1, 1);
  std::vector<bool> composite(lim + 1, false);
  for (std::uint64_t p = 2; p <= lim; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t k = p; k <= lim; k += p) {
      if (k > p) composite[k] = true;
      mu[k] = -mu[k];
    }
    for (std::uint64_t k = p * p; k <= lim; k += p * p) mu[k] = 0;
  }
  std::int64_t primitive = 0;
  for (std::uint64_t d = 1; d <= lim; ++d) {
    if (mu[d] == 0) continue;
    const std::uint64_t pts = ball_point_count(n, height_sq_bound / (d * d)) - 1;
    primitive += mu[d] * static_cast<std::int64_t>(pts);
  }
  return static_cast<std::uint64_t>(primitive / 2);
}

SquareFree square_free_part(const Int& n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "square_free_part needs n >= 1");
  // Trial division until p^3 exceeds the cofactor; what remains is then 1, a
  // prime, a product of two primes or a prime square.
  constexpr unsigned long kTrialLimit = 20000000;
  Int r = n, D = 1, m = 1;
  for (unsigned long p = 2;; p += (p == 2 ? 1 : 2)) {
    Int cube = Int(p) * p * p;
    if (cube > r) break;
    if (p > kTrialLimit) throw Error(ErrorCode::InputTooLarge, "square-free part needs a factor beyond the trial limit");
    if (mpz_divisible_ui_p(r.get_mpz_t(), p) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) m *= p;
    if (e % 2) D *= p;
  }
  if (r > 1 && mpz_perfect_square_p(r.get_mpz_t()) != 0) {
    Int root;
    mpz_sqrt(root.get_mpz_t(), r.get_mpz_t());
    m *= root;
  } else {
    D *= r;
  }
  return {D, m};
}

bool is_square_free(const Int& n) { return square_free_part(n).m == 1; }

SumIntersection lattice_sum_intersection(const IntLattice& l1, const IntLattice& l2) {
  if (l1.ambient_dim() != l2.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  SumIntersection r;
  r.sum = IntLattice::from_generators(hconcat(l1.basis(), l2.basis()));
  const std::size_t k1 = l1.rank(), k2 = l2.rank();
  IntMatrix neg = l2.basis();
  for (std::size_t i = 0; i < neg.rows(); ++i)
    for (std::size_t j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);
  IntMatrix ker = integer_kernel(hconcat(l1.basis(), neg));
  IntMatrix x = ker.row_block(0, k1);
  IntMatrix inter = l1.basis() * x;
  r.intersection = IntLattice::from_generators(inter);
  r.commensurable = (k1 == k2 && r.intersection.rank() == k1);
  return r;
}

Int sublattice_index(const IntLattice& sub, const IntLattice& super) {
  if (sub.rank() != super.rank()) throw Error(ErrorCode::RankMismatch, "ranks differ");
  Int a = covolume_squared(sub), b = covolume_squared(super);
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw Error(ErrorCode::InvalidInput, "not a sublattice");
  Int q = a / b;
  Int s;
  mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
  if (s * s != q) throw Error(ErrorCode::InvalidInput, "not a sublattice");
  return s;
}

}  // namespace crystnet
