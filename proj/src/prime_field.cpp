#include "prime_field.hpp"

#include "ksphere/errors.hpp"

#include <cmath>
#include <utility>

namespace ksphere::detail {

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  Residue r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw InternalError("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Residue PrimeField::from_int(std::int64_t v) const {
  auto m = static_cast<std::int64_t>(p_);
  auto r = v % m;
  return static_cast<Residue>(r < 0 ? r + m : r);
}

Residue PrimeField::primitive_root() const {
  std::vector<std::uint64_t> factors;
  std::uint64_t n = p_ - 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    factors.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) factors.push_back(n);
  for (Residue g = 2; g < p_; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (pow(g, (p_ - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1; // p = 2
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order) {
  for (std::uint64_t p = exponent + 1;; p += exponent)
    if (p * p > 4 * order && is_prime(p)) return p;
}

std::vector<std::vector<Residue>> nullspace(ModMatrix a, const PrimeField& f) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    auto inv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      auto factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = f.neg(a[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Residue> characteristic_polynomial(ModMatrix h, const PrimeField& f) {
  const std::size_t n = h.size();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (auto& row : h) std::swap(row[piv], row[j + 1]);
    }
    auto inv = f.inv(h[j + 1][j]);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h[r][j] == 0) continue;
      auto u = f.mul(h[r][j], inv);
      for (std::size_t c = 0; c < n; ++c) h[r][c] = f.sub(h[r][c], f.mul(u, h[j + 1][c]));
      for (std::size_t c = 0; c < n; ++c) h[c][j + 1] = f.add(h[c][j + 1], f.mul(u, h[c][r]));
    }
  }
  // Recurrence on leading principal minors.
  std::vector<std::vector<Residue>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    p[k].assign(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      p[k][i + 1] = f.add(p[k][i + 1], p[k - 1][i]);
      p[k][i] = f.sub(p[k][i], f.mul(h[k - 1][k - 1], p[k - 1][i]));
    }
    Residue t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h[k - i][k - i - 1]);
      auto coef = f.mul(t, h[k - i - 1][k - 1]);
      if (coef == 0) continue;
      const auto& q = p[k - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) p[k][d] = f.sub(p[k][d], f.mul(coef, q[d]));
    }
  }
  return p[n];
}

std::vector<Residue> roots(const std::vector<Residue>& poly, const PrimeField& f) {
  std::vector<Residue> out;
  for (Residue x = 0; x < f.prime(); ++x) {
    Residue v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = f.add(f.mul(v, x), poly[i]);
    if (v == 0) out.push_back(x);
  }
  return out;
}

} // namespace ksphere::detail
