#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace charfield::nt {

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// If n = p^m with p prime and m >= 1, returns {p, m}; otherwise {0, 0}.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Sum of the exponents in the prime factorization (prime factors counted with multiplicity).
unsigned omega_with_multiplicity(std::uint64_t n);

std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Reduces a signed integer into [0, m).
std::uint64_t reduce(std::int64_t a, std::uint64_t m);

/// Smallest primitive root modulo the prime p.
std::uint64_t primitive_root(std::uint64_t p);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Floor of log2(log2(n)) computed exactly; n >= 2.
int floor_log2_log2(std::uint64_t n);

}  // namespace charfield::nt
