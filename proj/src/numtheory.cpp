#include "charfield/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace charfield::nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

unsigned omega_with_multiplicity(std::uint64_t n) {
  unsigned total = 0;
  for (auto [p, e] : factorize(n)) total += e;
  return total;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("invmod: argument not invertible");
  return reduce(t, m);
}

std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
  std::int64_t r = a % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto factors = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : factors)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::domain_error("primitive_root: no generator found");
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (std::gcd(a, m) != 1) throw std::domain_error("multiplicative_order: not a unit");
  std::uint64_t order = euler_phi(m);
  for (auto [q, e] : factorize(order))
    while (order % q == 0 && powmod(a, order / q, m) == 1) order /= q;
  return order;
}

int floor_log2_log2(std::uint64_t n) {
  if (n < 2) throw std::domain_error("floor_log2_log2: n must be at least 2");
  // t is the answer iff 2^(2^t) <= n < 2^(2^(t+1)).
  unsigned floor_log2 = 63 - static_cast<unsigned>(__builtin_clzll(n));
  int t = 0;
  while ((1u << (t + 1)) <= floor_log2) ++t;
  return t;
}

}  // namespace charfield::nt
