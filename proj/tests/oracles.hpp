// Brute-force reference computations used by the tests. None of these go
// through the library's character machinery.
#pragma once

#include "ksphere/characters.hpp"
#include "ksphere/group.hpp"
#include "ksphere/lattice.hpp"

#include <algorithm>
#include <complex>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using ksphere::Element;
using ksphere::GroupTable;
using cplx = std::complex<double>;

inline std::set<std::set<Element>> classes(const GroupTable& g) {
  std::set<std::set<Element>> out;
  for (Element h = 0; h < g.order; ++h) {
    std::set<Element> cls;
    for (Element x = 0; x < g.order; ++x) cls.insert(g.mul(g.mul(g.inv(x), h), x));
    out.insert(cls);
  }
  return out;
}

inline std::size_t element_order(const GroupTable& g, Element x) {
  std::size_t n = 1;
  for (Element y = x; y != g.identity; y = g.mul(y, x)) ++n;
  return n;
}

/// Number of conjugacy classes of the subgroup `elems` (closed under the
/// product of g) that conjugation by b maps to themselves.
inline std::size_t stable_classes(const GroupTable& g, const std::vector<Element>& elems, Element b) {
  std::set<Element> in(elems.begin(), elems.end());
  std::set<std::set<Element>> cls;
  for (auto h : elems) {
    std::set<Element> c;
    for (auto x : elems) c.insert(g.mul(g.mul(g.inv(x), h), x));
    cls.insert(c);
  }
  std::size_t stable = 0;
  for (const auto& c : cls) {
    std::set<Element> image;
    for (auto h : c) image.insert(g.mul(g.mul(g.inv(b), h), b));
    if (image == c) ++stable;
  }
  return stable;
}

inline std::size_t class_count(const GroupTable& g) { return classes(g).size(); }

/// Complex value of a class function at every element.
inline std::vector<cplx> pointwise(const ksphere::ClassFunction& f) {
  const auto& cc = f.space->classes;
  std::vector<cplx> v(f.space->group->order);
  for (Element x = 0; x < v.size(); ++x) v[x] = f.values[cc.class_of[x]].to_complex();
  return v;
}

/// <a, b> = |G|^-1 sum_x a(x) conj(b(x)) in floating point.
inline cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx s = 0;
  for (std::size_t x = 0; x < a.size(); ++x) s += a[x] * std::conj(b[x]);
  return s / static_cast<double>(a.size());
}

/// ind chi(g) = |H|^-1 sum_{x in G} chi°(x^-1 g x), chi given on subgroup
/// elements (indexed as in emb.subgroup).
inline std::vector<cplx> induce(const GroupTable& g, const ksphere::SubgroupEmbedding& emb,
                                const std::vector<cplx>& chi) {
  std::vector<cplx> out(g.order);
  for (Element y = 0; y < g.order; ++y) {
    cplx s = 0;
    for (Element x = 0; x < g.order; ++x) {
      auto c = g.mul(g.mul(g.inv(x), y), x);
      if (emb.contains(c)) s += chi[static_cast<std::size_t>(emb.preimage[c])];
    }
    out[y] = s / static_cast<double>(emb.subgroup.order);
  }
  return out;
}

/// Integer multiplicities of a numeric class function over a character table.
inline std::vector<long> decompose(const ksphere::CharacterTable& t, const std::vector<cplx>& f) {
  std::vector<long> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto ip = inner(f, pointwise(t.irreducible(i)));
    out.push_back(std::lround(ip.real()));
  }
  return out;
}

// Exact rational linear algebra for span membership.
struct Q {
  __int128 n = 0, d = 1;
  Q() = default;
  Q(__int128 a, __int128 b = 1) : n(a), d(b) {
    if (d < 0) n = -n, d = -d;
    auto g = gcd(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
  }
  static __int128 gcd(__int128 a, __int128 b) {
    while (b) {
      auto t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  friend Q operator-(Q a, Q b) { return Q(a.n * b.d - b.n * a.d, a.d * b.d); }
  friend Q operator*(Q a, Q b) { return Q(a.n * b.n, a.d * b.d); }
  friend Q operator/(Q a, Q b) { return Q(a.n * b.d, a.d * b.n); }
  bool zero() const { return n == 0; }
};

/// Coefficients c with sum_j c_j rows[j] = target, if the rows are independent
/// and target lies in their rational span.
inline std::optional<std::vector<Q>> solve(const ksphere::IntMatrix& rows,
                                           const ksphere::IntVector& target) {
  const auto r = rows.size();
  const auto n = target.size();
  // augmented columns: one equation per coordinate
  std::vector<std::vector<Q>> a(n, std::vector<Q>(r + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = Q(rows[j][i]);
    a[i][r] = Q(target[i]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c].zero()) ++p;
    if (p == n) return std::nullopt; // dependent rows
    std::swap(a[p], a[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][c].zero()) continue;
      auto f = a[i][c] / a[row][c];
      for (std::size_t j = c; j <= r; ++j) a[i][j] = a[i][j] - f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (!a[i][r].zero()) return std::nullopt;
  std::vector<Q> x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = a[i][r] / a[i][i];
  return x;
}

inline bool in_integer_span(const ksphere::IntMatrix& rows, const ksphere::IntVector& target) {
  auto x = solve(rows, target);
  if (!x) return false;
  return std::all_of(x->begin(), x->end(), [](const Q& q) { return q.d == 1; });
}

} // namespace oracle
