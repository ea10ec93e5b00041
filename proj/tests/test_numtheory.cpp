#include <cmath>
#include <numeric>

#include "doctest.h"

#include "charfield/numtheory.hpp"
#include "charfield/oracles.hpp"

using namespace charfield;

TEST_CASE("factorization and totient agree with gcd counting") {
  for (std::uint64_t n = 1; n <= 600; ++n) {
    std::uint64_t prod = 1;
    for (auto [p, a] : nt::factorize(n)) {
      CHECK(nt::is_prime(p));
      for (unsigned i = 0; i < a; ++i) prod *= p;
    }
    CHECK(prod == n);
    CHECK(nt::euler_phi(n) == oracle::totient_by_gcd(n));
  }
}

TEST_CASE("prime powers") {
  CHECK(nt::prime_power(8) == std::pair<std::uint64_t, unsigned>{2, 3});
  CHECK(nt::prime_power(27) == std::pair<std::uint64_t, unsigned>{3, 3});
  CHECK(nt::prime_power(19) == std::pair<std::uint64_t, unsigned>{19, 1});
  CHECK(nt::prime_power(12).first == 0);
  CHECK(nt::prime_power(1).first == 0);
}

TEST_CASE("omega counts prime factors with multiplicity") {
  CHECK(nt::omega_with_multiplicity(29120) == 9);  // 2^6 * 5 * 7 * 13
  CHECK(nt::omega_with_multiplicity(1) == 0);
  CHECK(nt::omega_with_multiplicity(60) == 4);
}

TEST_CASE("floor(log2 log2 n) is exact") {
  CHECK(nt::floor_log2_log2(2) == 0);
  CHECK(nt::floor_log2_log2(3) == 0);
  CHECK(nt::floor_log2_log2(4) == 1);
  CHECK(nt::floor_log2_log2(15) == 1);
  CHECK(nt::floor_log2_log2(16) == 2);
  CHECK(nt::floor_log2_log2(65535) == 3);
  CHECK(nt::floor_log2_log2(65536) == 4);
  CHECK(nt::floor_log2_log2(29120) == 3);
  for (std::uint64_t n = 2; n < 5000; n += 7)
    CHECK(nt::floor_log2_log2(n) == static_cast<int>(std::floor(std::log2(std::log2(static_cast<double>(n))) + 1e-12)));
}

TEST_CASE("modular helpers") {
  CHECK(nt::invmod(3, 7) == 5);
  CHECK(nt::powmod(2, 10, 1000) == 24);
  CHECK(nt::reduce(-1, 7) == 6);
  CHECK(nt::primitive_root(7) == 3);
  CHECK(nt::multiplicative_order(2, 7) == 3);
  CHECK(nt::lcm(4, 6) == 12);
  CHECK_THROWS(nt::invmod(2, 4));
}
