#include "crystnet/exact.hpp"

#include <cctype>

namespace crystnet {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorCode::BadEndpoint: return "BadEndpoint";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotFullColumnRank: return "NotFullColumnRank";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::InputTooLarge: return "InputTooLarge";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::NotCrystallographic: return "NotCrystallographic";
    case ErrorCode::InexactFrame: return "InexactFrame";
    case ErrorCode::NotASummand: return "NotASummand";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::ForceNotBalanced: return "ForceNotBalanced";
    case ErrorCode::ClassKillsWrongSubgroup: return "ClassKillsWrongSubgroup";
    case ErrorCode::DegeneratePeriodLattice: return "DegeneratePeriodLattice";
    case ErrorCode::NotTwoDimensional: return "NotTwoDimensional";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::SingularIplusX: return "SingularIplusX";
    case ErrorCode::NotInLieAlgebra: return "NotInLieAlgebra";
    case ErrorCode::NotPythagorean: return "NotPythagorean";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw Error(ErrorCode::InvalidInput, "non-integer entry");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat form(const RatVector& a, const RatMatrix& q, const RatVector& b) {
  if (q.rows() != a.size() || q.cols() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "bilinear form");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Rat row = 0;
    for (std::size_t j = 0; j < b.size(); ++j) row += q(i, j) * b[j];
    s += a[i] * row;
  }
  return s;
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = piv;
  return m;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

Rat determinant(const RatMatrix& m0) {
  if (m0.rows() != m0.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square");
  RatMatrix m = m0;
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Int determinant(const IntMatrix& m0) {
  if (m0.rows() != m0.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square");
  const std::size_t n = m0.rows();
  if (n == 0) return 1;
  IntMatrix m = m0;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RatMatrix aug = hconcat(m, RatMatrix::identity(n));
  std::vector<std::size_t> piv;
  RatMatrix r = rref(aug, &piv);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  return r.column_block(n, n);
}

RatMatrix solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "solve");
  const std::size_t n = a.rows();
  std::vector<std::size_t> piv;
  RatMatrix r = rref(hconcat(a, b), &piv);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1))
    throw Error(ErrorCode::DimensionMismatch, "singular system");
  return r.column_block(n, b.cols());
}

RatMatrix kernel_basis(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  RatMatrix r = rref(m, &piv);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, f);
    basis.push_back(std::move(v));
  }
  return RatMatrix::from_columns(n, basis);
}

std::vector<RatVector> gram_schmidt(const std::vector<RatVector>& vectors, const RatMatrix* q) {
  auto ip = [q](const RatVector& a, const RatVector& b) { return q ? form(a, *q, b) : dot(a, b); };
  std::vector<RatVector> out;
  std::vector<Rat> norms;
  for (const auto& v : vectors) {
    RatVector u = v;
    for (std::size_t k = 0; k < out.size(); ++k) {
      Rat c = ip(u, out[k]) / norms[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= c * out[k][i];
    }
    Rat nn = ip(u, u);
    if (nn == 0) continue;
    out.push_back(std::move(u));
    norms.push_back(nn);
  }
  return out;
}

Int content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Int lcm_of_denominators(const RatVector& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

IntVector primitive_integer_vector(const RatVector& v) {
  Int l = lcm_of_denominators(v);
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * l;
    out[i] = s.get_num();
  }
  Int g = content(out);
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

bool is_symmetric(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_positive_definite(const RatMatrix& m) {
  if (!is_symmetric(m)) return false;
  // Leading pivots of Gaussian elimination without swaps are ratios of
  // consecutive leading minors.
  RatMatrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    if (a(c, c) <= 0) return false;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return true;
}

std::string to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

Int parse_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw Error(ErrorCode::ParseError, "empty integer '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw Error(ErrorCode::ParseError, "bad integer '" + s + "'");
  Int n;
  n.set_str(s[0] == '+' ? s.substr(1) : s, 10);
  return n;
}

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_integer(s));
  Int p = parse_integer(s.substr(0, slash));
  std::string qs = s.substr(slash + 1);
  if (!qs.empty() && (qs[0] == '-' || qs[0] == '+'))
    throw Error(ErrorCode::ParseError, "signed denominator in '" + s + "'");
  Int q = parse_integer(qs);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace crystnet
