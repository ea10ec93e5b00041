#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace charfield {

using Rational = mpq_class;

/// An exact element of the cyclotomic field Q_n = Q(E(n)), E(n) = exp(2 pi i / n).
///
/// Values are stored at their minimal conductor as a dense vector of phi(n)
/// rational coefficients. For n = q_1 ... q_t (prime powers q_i = p_i^a_i) the
/// basis is the tensor product of the power bases {E(q_i)^j : 0 <= j < phi(q_i)};
/// every basis element is itself a power E(n)^e, so a value is always a
/// rational combination of roots of unity of order n. This is a Q-basis of
/// Q[x]/Phi_n with sparse reduction: E(p^a)^j for j >= phi(p^a) rewrites into
/// p - 1 basis monomials, and a value lies in Q_{n/p} exactly when its
/// p-component exponents are all divisible by p (or all zero when p || n).
/// Consequently equality is coefficientwise, and conductor 1 means rational.
class Cyclo {
 public:
  Cyclo() : Cyclo(0L) {}
  Cyclo(long value);  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// E(n)^k.
  static Cyclo root_of_unity(std::uint32_t n, std::int64_t k);
  /// sum of c * E(n)^e over the given (e, c) pairs; exponents are reduced mod n.
  static Cyclo from_terms(std::uint32_t n, const std::vector<std::pair<std::int64_t, Rational>>& terms);

  std::uint32_t conductor() const { return n_; }
  /// Coefficients in basis order (see basis_exponents()).
  const std::vector<Rational>& coefficients() const { return c_; }
  /// Exponents e with basis element i = E(n)^e, for the given conductor.
  static const std::vector<std::uint32_t>& basis_exponents(std::uint32_t n);
  /// Nonzero (exponent, coefficient) pairs sorted by exponent.
  std::vector<std::pair<std::uint32_t, Rational>> terms() const;

  bool is_zero() const { return n_ == 1 && c_[0] == 0; }
  bool is_rational() const { return n_ == 1; }
  /// Throws std::domain_error when the value is not rational.
  const Rational& rational_value() const;
  /// True iff all coefficients are integers, i.e. the value is an algebraic integer.
  bool is_integral() const;

  /// sigma_k : E(n) -> E(n)^k. Throws std::domain_error unless gcd(k, conductor) = 1.
  Cyclo galois(std::int64_t k) const;
  Cyclo conj() const { return galois(-1); }

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  Cyclo operator-() const;

  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
  /// Total order: conductor first, then coefficients lexicographically.
  friend std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b);

  /// GAP-style text, e.g. "-E(5)^2-E(5)^3" or "1/2".
  std::string to_string() const;

 private:
  Cyclo(std::uint32_t n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) {}
  Cyclo lifted(std::uint32_t n) const;
  void normalize();

  std::uint32_t n_ = 1;
  std::vector<Rational> c_;
};

/// [Q(c) : Q] = phi(n) / |{k mod n : sigma_k(c) = c}|, n the conductor.
std::uint32_t degree_over_Q(const Cyclo& c);

/// Degree of E(r) + E(r)^-1 over Q; r >= 3.
std::uint32_t omega_degree(std::uint32_t r);

struct SubfieldCount {
  std::uint32_t n = 0;
  std::uint32_t degree = 0;
  std::uint64_t count = 0;
};

/// Number of subfields of Q_n of prime degree d in {2, 3}: the number of index-d
/// subgroups of (Z/n)^*, i.e. (d^s - 1)/(d - 1) with s the d-rank of (Z/n)^*.
SubfieldCount count_subfields(std::uint32_t n, std::uint32_t d);

}  // namespace charfield
