#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace piw {

using Rational = mpq_class;
using Integer = mpz_class;

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n);

/// An exact element of Q(zeta_e), stored in the power basis 1, z, ..., z^(phi(e)-1)
/// obtained by reducing modulo the e-th cyclotomic polynomial. The conductor e is
/// the field the value is expressed in, not necessarily the smallest one.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(long value) : conductor_(1), coeffs_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(Rational value) : conductor_(1), coeffs_{std::move(value)} {}

  /// zeta_e^k for any integer k.
  static Cyclotomic root_of_unity(std::uint64_t e, std::int64_t k);
  /// sum_k coeffs[k] zeta_e^k with coeffs indexed by exponents 0..e-1 (any length <= e).
  static Cyclotomic from_exponents(std::uint64_t e, const std::vector<Rational>& coeffs);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// The same value expressed in Q(zeta_e) for a multiple e of the conductor.
  Cyclotomic lifted(std::uint64_t e) const;
  /// The same value in Q(zeta_e) for any e, or nullopt if it does not lie in that field.
  std::optional<Cyclotomic> in_conductor(std::uint64_t e) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& r) { return a /= r; }

  /// Applies zeta_e -> zeta_e^k. Throws DomainError unless gcd(k, e) = 1.
  Cyclotomic galois_conjugate(std::int64_t k) const;
  /// Complex conjugation.
  Cyclotomic conj() const { return galois_conjugate(-1); }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  std::optional<Integer> as_rational_integer() const;
  /// True iff every coefficient is an integer (an algebraic integer in Z[zeta_e]).
  bool has_integer_coefficients() const;

  /// Numerical value at zeta_e = exp(2 pi i / e); for display and cross-checks only.
  std::complex<double> evaluate() const;
  /// Linear combination of E(e)^k terms, e.g. "-1", "E(3)", "2*E(8)+E(8)^3".
  std::string to_string() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Lexicographic order on coefficients after bringing both to a common conductor.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::uint64_t e, std::vector<Rational> coeffs) : conductor_(e), coeffs_(std::move(coeffs)) {}
  static std::vector<Rational> reduce(std::uint64_t e, std::vector<Rational> poly);

  std::uint64_t conductor_;
  std::vector<Rational> coeffs_;
};

/// Least prime p with p = 1 (mod e) and p > lower_bound.
std::uint64_t least_prime_one_mod(std::uint64_t e, std::uint64_t lower_bound);

/// The ring map Z[zeta_E] -> F_p sending zeta_E to a fixed primitive E-th root z,
/// for a prime p = 1 (mod E). Values of any conductor dividing E can be reduced.
class ModularEmbedding {
 public:
  ModularEmbedding(std::uint64_t conductor, std::uint64_t prime);

  std::uint64_t conductor() const { return conductor_; }
  std::uint64_t prime() const { return prime_; }
  /// Image of zeta_E^k.
  std::uint64_t root(std::int64_t k) const;
  /// Throws DomainError if a denominator is divisible by p or the conductor does not divide E.
  std::uint64_t operator()(const Cyclotomic& value) const;

 private:
  std::uint64_t conductor_;
  std::uint64_t prime_;
  std::vector<std::uint64_t> powers_;  // z^0 .. z^(E-1)
};

}  // namespace piw
