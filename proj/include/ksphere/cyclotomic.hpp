#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ksphere {

/// Overflow-checked int64 helpers; throw InternalError on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Euler's totient.
unsigned euler_phi(unsigned m);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term
/// first; the result has euler_phi(m) + 1 entries.
std::vector<std::int64_t> cyclotomic_polynomial(unsigned m);

/// Reduction data for Z[z]/(Phi_m(z)) in the power basis 1, z, ..., z^(phi-1).
class CyclotomicRing {
public:
  struct Term {
    unsigned index;
    std::int64_t coefficient;
  };

  explicit CyclotomicRing(unsigned m);

  unsigned modulus() const { return m_; }
  unsigned degree() const { return phi_; }
  const std::vector<std::int64_t>& polynomial() const { return poly_; }

  /// Reduced form of z^k for 0 <= k < m, as sparse terms.
  std::span<const Term> power(unsigned k) const { return powers_[k % m_]; }

  /// Map an exponent-space vector (length m, entry k = multiplicity of z^k)
  /// to reduced power-basis coefficients.
  std::vector<std::int64_t> reduce(std::span<const std::int64_t> by_exponent) const;

private:
  unsigned m_;
  unsigned phi_;
  std::vector<std::int64_t> poly_;
  std::vector<std::vector<Term>> powers_;
};

/// Shared, thread-safe cache of rings keyed by modulus.
const CyclotomicRing& cyclotomic_ring(unsigned m);

/// An element of Q(z_m) with z_m = exp(2 pi i / m), stored as reduced
/// integer power-basis coefficients over a positive common denominator.
/// The representation is canonical, so equality is coefficient equality.
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(1, {0}) {}
  Cyclotomic(unsigned modulus, std::vector<std::int64_t> coefficients,
             std::int64_t denominator = 1);

  static Cyclotomic integer(unsigned modulus, std::int64_t value);
  static Cyclotomic root_of_unity(unsigned modulus, std::uint64_t k);
  /// sum_k multiplicities[k] * z^k over k in [0, m).
  static Cyclotomic from_exponents(unsigned modulus,
                                   std::span<const std::int64_t> multiplicities);

  unsigned modulus() const { return m_; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The value as an integer, if it is one.
  std::optional<std::int64_t> as_integer() const;

  /// Complex conjugation z -> z^-1.
  Cyclotomic conj() const;
  /// The same number viewed in Q(z_M); M must be a multiple of the modulus.
  Cyclotomic embed(unsigned new_modulus) const;
  /// Divide by a non-zero integer (exact, may introduce a denominator).
  Cyclotomic divided_by(std::int64_t d) const;

  std::complex<double> to_complex() const;
  /// e.g. "-1 - z", "2*z^3", "(1 + z)/2" with z = exp(2 pi i/m).
  std::string to_string() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(std::int64_t s, const Cyclotomic& a);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;
  /// Lexicographic on (modulus, coefficients, denominator).
  friend auto operator<=>(const Cyclotomic&, const Cyclotomic&) = default;

private:
  void normalize();

  unsigned m_;
  std::vector<std::int64_t> c_;
  std::int64_t den_ = 1;
};

} // namespace ksphere
