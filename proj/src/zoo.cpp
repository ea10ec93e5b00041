#include "charfield/zoo.hpp"

#include <array>
#include <map>
#include <numeric>
#include <string>

#include "charfield/errors.hpp"
#include "charfield/gf.hpp"
#include "charfield/numtheory.hpp"

namespace charfield {

namespace {

std::vector<Point> cycle_images(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < length; ++i)
    images[first + i] = static_cast<Point>(first + (i + 1) % length);
  return images;
}

void expect_order(const PermGroup& g, std::uint64_t expected, const std::string& name) {
  if (g.order() != expected)
    throw ConstructionError(name + ": generated group has order " + std::to_string(g.order()) + ", expected " +
                            std::to_string(expected));
}

std::shared_ptr<const gf::FieldSpec> field_of_order(std::uint32_t q, const std::string& name) {
  auto [p, m] = nt::prime_power(q);
  if (p == 0) throw ConstructionError(name + ": q = " + std::to_string(q) + " is not a prime power");
  return gf::field(static_cast<std::uint32_t>(p), m);
}

using Mat2 = std::array<gf::FieldElem, 4>;  // row-major [[a, b], [c, d]]

}  // namespace

PermGroup cyclic(std::uint32_t n) {
  if (n == 0) throw ConstructionError("cyclic: n must be at least 1");
  if (n > 65536) throw ConstructionError("cyclic: n exceeds the 65536-point degree limit");
  return PermGroup::enumerate(n, {Permutation(cycle_images(n, 0, n))});
}

PermGroup dihedral(std::uint32_t n) {
  if (n % 2 != 0 || n < 6)
    throw ConstructionError("dihedral: D_n denotes the dihedral group of order n; n must be even and at least 6");
  const std::uint32_t m = n / 2;
  std::vector<Point> reflection(m);
  for (std::uint32_t i = 0; i < m; ++i) reflection[i] = static_cast<Point>((m - i) % m);
  auto g = PermGroup::enumerate(m, {Permutation(cycle_images(m, 0, m)), Permutation(std::move(reflection))});
  expect_order(g, n, "dihedral");
  return g;
}

PermGroup frobenius(std::uint32_t p, std::uint32_t k) {
  if (p < 3 || !nt::is_prime(p)) throw ConstructionError("frobenius: p must be an odd prime");
  if (k < 2 || (p - 1) % k != 0) throw ConstructionError("frobenius: k must satisfy k >= 2 and k | p - 1");
  std::uint32_t a = 2;
  while (nt::multiplicative_order(a, p) != k) ++a;
  std::vector<Point> scale(p);
  for (std::uint32_t x = 0; x < p; ++x) scale[x] = static_cast<Point>(std::uint64_t{a} * x % p);
  auto g = PermGroup::enumerate(p, {Permutation(cycle_images(p, 0, p)), Permutation(std::move(scale))});
  expect_order(g, std::uint64_t{p} * k, "frobenius");
  return g;
}

PermGroup symmetric(std::uint32_t n) {
  if (n < 2 || n > 9) throw ConstructionError("symmetric: n must be in [2, 9]");
  auto g = PermGroup::enumerate(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation(cycle_images(n, 0, n))});
  std::uint64_t fact = 1;
  for (std::uint32_t i = 2; i <= n; ++i) fact *= i;
  expect_order(g, fact, "symmetric");
  return g;
}

PermGroup alternating(std::uint32_t n) {
  if (n < 2 || n > 9) throw ConstructionError("alternating: n must be in [2, 9]");
  std::vector<Permutation> gens;
  if (n == 2) {
    gens.push_back(Permutation::identity(2));
  } else {
    gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
    // (0 1 ... n-1) is even for odd n; for even n use (1 2 ... n-1).
    gens.emplace_back(n % 2 == 1 ? cycle_images(n, 0, n) : cycle_images(n, 1, n - 1));
  }
  auto g = PermGroup::enumerate(n, std::move(gens));
  std::uint64_t fact = 1;
  for (std::uint32_t i = 3; i <= n; ++i) fact *= i;
  expect_order(g, fact, "alternating");
  return g;
}

namespace {

// T = [[1,1],[0,1]], D = diag(w, w^-1) with w primitive, W = [[0,1],[-1,0]]; together they generate SL(2,q).
std::vector<Mat2> sl2_generators(const gf::FieldSpec& F) {
  const auto zero = F.zero(), one = F.one();
  const auto w = F.primitive_element();
  return {Mat2{one, one, zero, one}, Mat2{w, zero, zero, w.inverse()}, Mat2{zero, one, -one, zero}};
}

void check_linear_q(std::uint32_t q, const std::string& name) {
  if (q < 4 || q > 32) throw ConstructionError(name + ": q must be in [4, 32]");
}

}  // namespace

PermGroup psl2(std::uint32_t q) {
  check_linear_q(q, "psl2");
  auto F = field_of_order(q, "psl2");
  const Point infinity = static_cast<Point>(q);
  std::vector<Permutation> gens;
  for (const auto& M : sl2_generators(*F)) {
    const auto& [a, b, c, d] = M;
    std::vector<Point> images(q + 1);
    for (std::uint32_t i = 0; i < q; ++i) {
      auto x = F->from_index(i);
      auto den = c * x + d;
      images[i] = den.is_zero() ? infinity : static_cast<Point>(((a * x + b) / den).index());
    }
    images[q] = c.is_zero() ? infinity : static_cast<Point>((a / c).index());
    gens.emplace_back(std::move(images));
  }
  auto g = PermGroup::enumerate(q + 1, std::move(gens));
  const std::uint64_t qq = q;
  expect_order(g, qq * (qq * qq - 1) / std::gcd<std::uint64_t>(2, qq - 1), "psl2");
  return g;
}

PermGroup sl2(std::uint32_t q) {
  check_linear_q(q, "sl2");
  auto F = field_of_order(q, "sl2");
  const std::uint32_t degree = q * q - 1;
  std::vector<Permutation> gens;
  for (const auto& M : sl2_generators(*F)) {
    const auto& [a, b, c, d] = M;
    std::vector<Point> images(degree);
    for (std::uint32_t v = 1; v < q * q; ++v) {
      auto x = F->from_index(v / q), y = F->from_index(v % q);
      std::uint32_t image = (a * x + b * y).index() * q + (c * x + d * y).index();
      images[v - 1] = static_cast<Point>(image - 1);
    }
    gens.emplace_back(std::move(images));
  }
  auto g = PermGroup::enumerate(degree, std::move(gens));
  const std::uint64_t qq = q;
  expect_order(g, qq * (qq * qq - 1), "sl2");
  return g;
}

PermGroup suzuki(std::uint32_t q) {
  if (q != 8) throw ConstructionError("suzuki: only q = 8 is supported");
  const unsigned odd_degree = nt::prime_power(q).second;
  const std::uint32_t t = (odd_degree - 1) / 2;
  auto F = gf::field(2, odd_degree);
  const auto zero = F->zero(), one = F->one();
  auto twist = [&](const gf::FieldElem& x) { return x.frobenius(t + 1); };  // x -> x^(2^(t+1))

  using Mat4 = std::array<std::array<gf::FieldElem, 4>, 4>;
  auto T = [&](const gf::FieldElem& a, const gf::FieldElem& b) {
    return Mat4{{{one, zero, zero, zero},
                 {a, one, zero, zero},
                 {b, twist(a), one, zero},
                 {a * a * twist(a) + a * b + twist(b), a * twist(a) + b, a, one}}};
  };
  const auto kappa = F->primitive_element();
  const std::int64_t s = std::int64_t{1} << t;
  const Mat4 M{{{kappa.pow(1 + s), zero, zero, zero},
                {zero, kappa.pow(s), zero, zero},
                {zero, zero, kappa.pow(-s), zero},
                {zero, zero, zero, kappa.pow(-1 - s)}}};
  const Mat4 W{{{zero, zero, zero, one}, {zero, zero, one, zero}, {zero, one, zero, zero}, {one, zero, zero, zero}}};
  const std::vector<Mat4> mats{T(one, zero), T(zero, one), M, W};

  // Projective points as normalized row vectors (first nonzero coordinate = 1), keyed by element indices.
  using Key = std::array<std::uint32_t, 4>;
  auto act = [&](const Key& v, const Mat4& A) {
    std::array<gf::FieldElem, 4> r{zero, zero, zero, zero};
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i) r[j] = r[j] + F->from_index(v[i]) * A[i][j];
    gf::FieldElem lead = zero;
    for (const auto& x : r)
      if (!x.is_zero()) {
        lead = x;
        break;
      }
    Key out;
    for (int j = 0; j < 4; ++j) out[j] = (r[j] / lead).index();
    return out;
  };

  std::map<Key, Point> orbit_index;
  std::vector<Key> orbit{Key{0, 0, 0, 1}};
  orbit_index[orbit[0]] = 0;
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const auto& A : mats) {
      Key w = act(orbit[head], A);
      if (orbit_index.emplace(w, static_cast<Point>(orbit.size())).second) orbit.push_back(w);
    }
  const std::uint64_t qq = q;
  if (orbit.size() != qq * qq + 1)
    throw ConstructionError("suzuki: ovoid orbit has " + std::to_string(orbit.size()) + " points, expected " +
                            std::to_string(qq * qq + 1));

  std::vector<Permutation> gens;
  for (const auto& A : mats) {
    std::vector<Point> images(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) images[i] = orbit_index.at(act(orbit[i], A));
    gens.emplace_back(std::move(images));
  }
  auto g = PermGroup::enumerate(orbit.size(), std::move(gens));
  expect_order(g, qq * qq * (qq - 1) * (qq * qq + 1), "suzuki");
  return g;
}

PermGroup direct_product(const std::vector<PermGroup>& factors) {
  if (factors.empty()) throw ConstructionError("direct product needs at least one factor");
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  if (degree > 65536) throw ConstructionError("direct product exceeds the 65536-point degree limit");
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  std::uint64_t order = 1;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t i = 0; i < f.degree(); ++i) images[offset + i] = static_cast<Point>(offset + g(static_cast<Point>(i)));
      gens.emplace_back(std::move(images));
    }
    offset += f.degree();
    order *= f.order();
  }
  auto g = PermGroup::enumerate(degree, std::move(gens));
  expect_order(g, order, "direct product");
  return g;
}

PermGroup build_group(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::Cyclic: return cyclic(spec.args.at(0));
    case K::Dihedral: return dihedral(spec.args.at(0));
    case K::Frobenius: return frobenius(spec.args.at(0), spec.args.at(1));
    case K::Alternating: return alternating(spec.args.at(0));
    case K::Symmetric: return symmetric(spec.args.at(0));
    case K::PSL2: return psl2(spec.args.at(0));
    case K::SL2: return sl2(spec.args.at(0));
    case K::Suzuki: return suzuki(spec.args.at(0));
    case K::Product: {
      std::vector<PermGroup> groups;
      for (const auto& f : spec.factors) groups.push_back(build_group(f));
      return direct_product(groups);
    }
  }
  throw ConstructionError("unknown group kind");
}

}  // namespace charfield
