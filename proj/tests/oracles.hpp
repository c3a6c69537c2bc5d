#pragma once

// Independent brute-force computations used as test oracles. Everything here
// works on machine integers and avoids the library's normal-form code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "crystnet/graph.hpp"

namespace oracle {

/// Number of spanning trees by scanning all (V-1)-subsets of non-loop edges.
inline std::uint64_t spanning_trees(const crystnet::FiniteGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (const auto& e : g.edges())
    if (e.a != e.b) es.emplace_back(e.a, e.b);
  if (n == 1) return 1;
  const std::size_t k = n - 1;
  if (es.size() < k) return 0;
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

inline std::int64_t gcd_all(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

/// Sign-normalized vector: first nonzero entry positive.
inline std::vector<std::int64_t> normalize_sign(std::vector<std::int64_t> v) {
  for (auto x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

/// Rank-one summands of Z^n with squared norm <= bound, as sign-normalized
/// primitive vectors.
inline std::set<std::vector<std::int64_t>> rank1_summands(std::size_t n, std::int64_t bound) {
  std::set<std::vector<std::int64_t>> out;
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= bound) ++r;
  std::vector<std::int64_t> x(n, -r);
  while (true) {
    std::int64_t nn = 0;
    for (auto v : x) nn += v * v;
    if (nn > 0 && nn <= bound && gcd_all(x) == 1) out.insert(normalize_sign(x));
    std::size_t i = 0;
    while (i < n && x[i] == r) x[i++] = -r;
    if (i == n) break;
    ++x[i];
  }
  return out;
}

/// Plücker coordinates (2x2 minors in lexicographic index order).
inline std::vector<std::int64_t> plucker(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> p;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) p.push_back(u[i] * v[j] - u[j] * v[i]);
  return p;
}

/// Rank-two summands of Z^n with covolume^2 <= bound, keyed by their
/// sign-normalized primitive Plücker vectors. Scans pairs of vectors with
/// entries bounded by floor(sqrt(bound)) + 1.
inline std::set<std::vector<std::int64_t>> rank2_summands(std::size_t n, std::int64_t bound) {
  std::int64_t e = 0;
  while ((e + 1) * (e + 1) <= bound) ++e;
  e += 1;
  std::vector<std::vector<std::int64_t>> vecs;
  std::vector<std::int64_t> x(n, -e);
  while (true) {
    vecs.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == e) x[i++] = -e;
    if (i == n) break;
    ++x[i];
  }
  std::set<std::vector<std::int64_t>> out;
  for (std::size_t a = 0; a < vecs.size(); ++a)
    for (std::size_t b = a + 1; b < vecs.size(); ++b) {
      auto p = plucker(vecs[a], vecs[b]);
      std::int64_t vol = 0;
      for (auto m : p) vol += m * m;
      if (vol == 0 || vol > bound) continue;
      if (gcd_all(p) != 1) continue;
      out.insert(normalize_sign(p));
    }
  return out;
}

/// Whether D m^2 = a^2 + b^2 + c^2 has a solution with |a|,|b|,|c| <= window.
inline bool three_squares_bruteforce(std::int64_t D, std::int64_t window) {
  for (std::int64_t m = 1; m <= window; ++m) {
    const std::int64_t target = D * m * m;
    for (std::int64_t a = 0; a <= window; ++a)
      for (std::int64_t b = a; b <= window; ++b)
        for (std::int64_t c = b; c <= window; ++c)
          if (a * a + b * b + c * c == target) return true;
  }
  return false;
}

inline bool square_free_bruteforce(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace oracle
