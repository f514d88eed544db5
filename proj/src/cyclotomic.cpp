#include "ksphere/cyclotomic.hpp"

#include "ksphere/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

namespace ksphere {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("int64 overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw InternalError("int64 overflow in multiplication");
  return r;
}

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw InputError("cyclotomic modulus must be positive");
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    auto den = cyclotomic_polynomial(d);
    // monic exact division
    std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dn, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dn; --i) {
      auto coef = num[i];
      q[i - dn] = coef;
      if (coef != 0)
        for (std::size_t j = 0; j <= dn; ++j)
          num[i - dn + j] = checked_add(num[i - dn + j], -checked_mul(coef, den[j]));
      if (i == dn) break;
    }
    num = std::move(q);
  }
  return num;
}

CyclotomicRing::CyclotomicRing(unsigned m)
    : m_(m), phi_(euler_phi(m)), poly_(cyclotomic_polynomial(m)) {
  powers_.resize(m_);
  std::vector<std::int64_t> cur(phi_, 0);
  cur[0] = 1;
  for (unsigned k = 0; k < m_; ++k) {
    for (unsigned i = 0; i < phi_; ++i)
      if (cur[i] != 0) powers_[k].push_back({i, cur[i]});
    // multiply by z and reduce with the monic polynomial
    std::int64_t top = cur[phi_ - 1];
    for (unsigned i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < phi_; ++i)
        cur[i] = checked_add(cur[i], -checked_mul(top, poly_[i]));
  }
}

std::vector<std::int64_t> CyclotomicRing::reduce(
    std::span<const std::int64_t> by_exponent) const {
  std::vector<std::int64_t> out(phi_, 0);
  for (unsigned k = 0; k < by_exponent.size(); ++k) {
    auto c = by_exponent[k];
    if (c == 0) continue;
    for (const auto& t : power(k))
      out[t.index] = checked_add(out[t.index], checked_mul(c, t.coefficient));
  }
  return out;
}

const CyclotomicRing& cyclotomic_ring(unsigned m) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<const CyclotomicRing>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<const CyclotomicRing>(m);
  return *slot;
}

// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic(unsigned modulus, std::vector<std::int64_t> coefficients,
                       std::int64_t denominator)
    : m_(modulus), c_(std::move(coefficients)), den_(denominator) {
  if (m_ == 0) throw InputError("cyclotomic modulus must be positive");
  if (c_.size() != euler_phi(m_))
    throw InputError("cyclotomic coefficient vector must have length phi(m)");
  if (den_ == 0) throw InputError("zero denominator");
  normalize();
}

void Cyclotomic::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : c_) x = -x;
  }
  std::int64_t g = den_;
  for (auto x : c_) g = std::gcd(g, x);
  if (g > 1) {
    den_ /= g;
    for (auto& x : c_) x /= g;
  }
  if (is_zero()) den_ = 1;
}

Cyclotomic Cyclotomic::integer(unsigned modulus, std::int64_t value) {
  std::vector<std::int64_t> c(euler_phi(modulus), 0);
  c[0] = value;
  return Cyclotomic(modulus, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned modulus, std::uint64_t k) {
  const auto& ring = cyclotomic_ring(modulus);
  std::vector<std::int64_t> c(ring.degree(), 0);
  for (const auto& t : ring.power(static_cast<unsigned>(k % modulus)))
    c[t.index] = t.coefficient;
  return Cyclotomic(modulus, std::move(c));
}

Cyclotomic Cyclotomic::from_exponents(unsigned modulus,
                                      std::span<const std::int64_t> multiplicities) {
  if (multiplicities.size() != modulus)
    throw InputError("exponent vector must have length m");
  return Cyclotomic(modulus, cyclotomic_ring(modulus).reduce(multiplicities));
}

bool Cyclotomic::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::optional<std::int64_t> Cyclotomic::as_integer() const {
  if (!is_rational() || den_ != 1) return std::nullopt;
  return c_[0];
}

Cyclotomic Cyclotomic::conj() const {
  const auto& ring = cyclotomic_ring(m_);
  std::vector<std::int64_t> acc(m_, 0);
  for (unsigned r = 0; r < c_.size(); ++r)
    if (c_[r] != 0) acc[(m_ - r) % m_] = c_[r];
  return Cyclotomic(m_, ring.reduce(acc), den_);
}

Cyclotomic Cyclotomic::embed(unsigned new_modulus) const {
  if (new_modulus == m_) return *this;
  if (new_modulus % m_ != 0)
    throw InputError("cannot embed Q(z_" + std::to_string(m_) + ") into Q(z_" +
                     std::to_string(new_modulus) + ")");
  unsigned scale = new_modulus / m_;
  std::vector<std::int64_t> acc(new_modulus, 0);
  for (unsigned r = 0; r < c_.size(); ++r) acc[r * scale] = c_[r];
  return Cyclotomic(new_modulus, cyclotomic_ring(new_modulus).reduce(acc), den_);
}

Cyclotomic Cyclotomic::divided_by(std::int64_t d) const {
  if (d == 0) throw InputError("division by zero");
  return Cyclotomic(m_, c_, checked_mul(den_, d));
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (unsigned r = 0; r < c_.size(); ++r)
    if (c_[r] != 0)
      z += static_cast<double>(c_[r]) *
           std::polar(1.0, 2.0 * std::numbers::pi * r / m_);
  return z / static_cast<double>(den_);
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (unsigned r = 0; r < c_.size(); ++r) {
    auto c = c_[r];
    if (c == 0) continue;
    auto mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (r == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += r == 1 ? "z" : "z^" + std::to_string(r);
    }
  }
  if (out.empty()) out = "0";
  if (den_ != 1) out = "(" + out + ")/" + std::to_string(den_);
  return out;
}

namespace {

void align(Cyclotomic& a, Cyclotomic& b) {
  if (a.modulus() == b.modulus()) return;
  unsigned l = std::lcm(a.modulus(), b.modulus());
  a = a.embed(l);
  b = b.embed(l);
}

} // namespace

Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
  Cyclotomic a = x, b = y;
  align(a, b);
  std::vector<std::int64_t> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_add(checked_mul(a.c_[i], b.den_), checked_mul(b.c_[i], a.den_));
  return Cyclotomic(a.m_, std::move(c), checked_mul(a.den_, b.den_));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic operator*(std::int64_t s, const Cyclotomic& a) {
  std::vector<std::int64_t> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(s, a.c_[i]);
  return Cyclotomic(a.m_, std::move(c), a.den_);
}

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
  Cyclotomic a = x, b = y;
  align(a, b);
  const auto m = a.m_;
  std::vector<std::int64_t> acc(m, 0);
  for (unsigned i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      auto& slot = acc[(i + j) % m];
      slot = checked_add(slot, checked_mul(a.c_[i], b.c_[j]));
    }
  }
  return Cyclotomic(m, cyclotomic_ring(m).reduce(acc), checked_mul(a.den_, b.den_));
}

} // namespace ksphere
