#include <set>

#include "doctest.h"

#include "charfield/errors.hpp"
#include "charfield/gf.hpp"

using namespace charfield;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> small_fields() {
  return {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {7, 2}, {2, 5}, {3, 3}, {2, 6}};
}

}  // namespace

TEST_CASE("field moduli") {
  CHECK(gf::field(7, 1)->order() == 7);
  CHECK(gf::field(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3 + x + 1
  CHECK(gf::field(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});     // x^2 + x + 1
  CHECK(gf::field(2, 3) == gf::field(2, 3));
  for (auto [p, m] : small_fields()) CHECK(gf::is_irreducible(gf::field(p, m)->modulus(), p));
}

TEST_CASE("modulus is the smallest irreducible in high-to-low lexicographic order") {
  for (auto [p, m] : small_fields()) {
    const auto chosen = gf::field(p, m)->modulus();
    auto key = [](const std::vector<std::uint32_t>& f) { return std::vector<std::uint32_t>(f.rbegin(), f.rend()); };
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
    std::vector<std::uint32_t> f(m + 1, 0);
    f[m] = 1;
    for (std::uint32_t v = 0; v < q; ++v) {
      std::uint32_t x = v;
      for (std::uint32_t i = 0; i < m; ++i) {
        f[i] = x % p;
        x /= p;
      }
      if (gf::is_irreducible(f, p)) CHECK(key(chosen) <= key(f));
    }
  }
}

TEST_CASE("field axioms exhaustively for q <= 64") {
  for (auto [p, m] : small_fields()) {
    const auto F = gf::field(p, m);
    const auto q = F->order();
    const auto zero = F->zero(), one = F->one();
    for (std::uint32_t i = 0; i < q; ++i) {
      const auto a = F->from_index(i);
      CHECK(a.index() == i);
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a - a == zero);
      if (!a.is_zero()) CHECK(a * a.inverse() == one);
      for (std::uint32_t j = 0; j < q; ++j) {
        const auto b = F->from_index(j);
        CHECK(a * b == b * a);
        // Frobenius is additive.
        CHECK((a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1));
      }
    }
  }
}

TEST_CASE("multiplicative group is cyclic") {
  for (auto [p, m] : small_fields()) {
    const auto F = gf::field(p, m);
    const auto g = F->primitive_element();
    std::set<std::uint32_t> seen;
    auto x = F->one();
    for (std::uint32_t i = 0; i + 1 < F->order(); ++i) {
      seen.insert(x.index());
      x = x * g;
    }
    CHECK(seen.size() == F->order() - 1);
    CHECK(x == F->one());
  }
}

TEST_CASE("examples") {
  const auto F7 = gf::field(7, 1);
  CHECK(F7->scalar(3).inverse() == F7->scalar(5));
  const auto F8 = gf::field(2, 3);
  for (std::uint32_t i = 0; i < 8; ++i) {
    const auto x = F8->from_index(i);
    // Squaring twice is the Suzuki twist x -> x^4.
    CHECK(x.frobenius(1).frobenius(1) == x.frobenius(2));
    CHECK(x.frobenius(2) == x.pow(4));
  }
  CHECK(F8->generator().pow(-1) * F8->generator() == F8->one());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(gf::field(6, 1), ValidationError);
  CHECK_THROWS_AS(gf::field(2, 0), ValidationError);
  CHECK_THROWS_AS(gf::field(2, 3)->zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(gf::field(2, 3)->one() + gf::field(2, 2)->one(), ValidationError);
}
