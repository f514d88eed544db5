#pragma once

// Arithmetic and linear algebra over F_p for the modular character-table
// computation. Internal to the library.

#include <cstdint>
#include <vector>

namespace ksphere::detail {

using Residue = std::uint64_t;
using ModMatrix = std::vector<std::vector<Residue>>;

class PrimeField {
public:
  explicit PrimeField(Residue p) : p_(p) {}

  Residue prime() const { return p_; }
  Residue add(Residue a, Residue b) const { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue pow(Residue a, std::uint64_t e) const;
  Residue inv(Residue a) const; // a != 0
  Residue from_int(std::int64_t v) const;

  /// Smallest generator of the multiplicative group.
  Residue primitive_root() const;

private:
  Residue p_;
};

bool is_prime(std::uint64_t n);

/// Smallest prime p = 1 (mod exponent) with p > 2 sqrt(order).
std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order);

/// Basis of {x : A x = 0} for an n x n (or r x n) matrix.
std::vector<std::vector<Residue>> nullspace(ModMatrix a, const PrimeField& f);

/// Characteristic polynomial det(xI - A), constant term first.
std::vector<Residue> characteristic_polynomial(ModMatrix a, const PrimeField& f);

/// Distinct roots in F_p, ascending.
std::vector<Residue> roots(const std::vector<Residue>& poly, const PrimeField& f);

} // namespace ksphere::detail
