#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "charfield/modp.hpp"

using namespace charfield;

namespace {

modp::Matrix random_matrix(std::mt19937_64& rng, std::size_t n, std::uint64_t p, std::uint64_t sparsity) {
  modp::Matrix m(n, n);
  for (auto& x : m.data) x = rng() % sparsity == 0 ? rng() % p : 0;
  return m;
}

// Leibniz expansion over all permutations.
std::uint64_t det(const modp::Matrix& m, std::uint64_t p) {
  std::vector<std::size_t> perm(m.rows);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0;
  do {
    std::uint64_t term = 1;
    for (std::size_t i = 0; i < m.rows; ++i) term = term * m(i, perm[i]) % p;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    total = (total + (inversions % 2 ? p - term : term)) % p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("characteristic polynomial agrees with det(xI - A)") {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {2ull, 3ull, 101ull, 14561ull}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 6;
      const auto a = random_matrix(rng, n, p, 1 + rng() % 3);
      const auto f = modp::charpoly(a, p);
      REQUIRE(f.size() == n + 1);
      CHECK(f.back() == 1);
      for (std::uint64_t x : {0ull, 1ull, 2ull % p, 7ull % p}) {
        modp::Matrix shifted(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) shifted(i, j) = ((i == j ? x : 0) + p - a(i, j)) % p;
        CHECK(modp::evaluate(f, x, p) == det(shifted, p));
      }
    }
  }
}

TEST_CASE("rref and nullspace") {
  std::mt19937_64 rng(6);
  const std::uint64_t p = 97;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const auto a = random_matrix(rng, n, p, 1 + rng() % 4);
    modp::Matrix r = a;
    const auto pivots = modp::rref(r, p);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      CHECK(r(i, pivots[i]) == 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) CHECK(r(k, pivots[i]) == 0);
    }
    const auto null = modp::nullspace(a, p);
    CHECK(null.size() + pivots.size() == n);
    for (const auto& v : null)
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < n; ++j) s = (s + a(i, j) * v[j]) % p;
        CHECK(s == 0);
      }
  }
  CHECK(modp::nullspace(modp::Matrix::identity(3), 5).empty());
}

TEST_CASE("roots match a brute-force scan") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2ull, 3ull, 7ull, 101ull, 6841ull}) {
    for (int trial = 0; trial < 40; ++trial) {
      // Random product of linear factors times a random cofactor.
      modp::Poly f{1};
      const std::size_t linear = rng() % 5;
      for (std::size_t i = 0; i < linear; ++i) {
        const std::uint64_t r = rng() % p;
        modp::Poly g(f.size() + 1, 0);
        for (std::size_t j = 0; j < f.size(); ++j) {
          g[j + 1] = (g[j + 1] + f[j]) % p;
          g[j] = (g[j] + (p - r) * f[j]) % p;
        }
        f = g;
      }
      if (rng() % 2) {
        modp::Poly extra{rng() % p, rng() % p, 1};
        modp::Poly g(f.size() + 2, 0);
        for (std::size_t i = 0; i < f.size(); ++i)
          for (std::size_t j = 0; j < extra.size(); ++j) g[i + j] = (g[i + j] + f[i] * extra[j]) % p;
        f = g;
      }
      const auto roots = modp::roots(f, p);
      std::vector<std::uint64_t> brute;
      if (p < 7000)
        for (std::uint64_t x = 0; x < p; ++x)
          if (modp::evaluate(f, x, p) == 0) brute.push_back(x);
      CHECK(roots.distinct == brute);
      CHECK(roots.with_multiplicity >= roots.distinct.size());
      CHECK(roots.with_multiplicity <= f.size() - 1);
    }
  }
  // (x - 3)^2 (x - 5) = x^3 - 11x^2 + 39x - 45 over GF(11).
  const auto r = modp::roots(modp::Poly{10, 6, 0, 1}, 11);
  CHECK(r.distinct == std::vector<std::uint64_t>{3, 5});
  CHECK(r.with_multiplicity == 3);
}
