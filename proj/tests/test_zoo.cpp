#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "charfield/errors.hpp"
#include "charfield/zoo.hpp"

using namespace charfield;

namespace {

std::vector<std::uint64_t> sorted_sizes(const PermGroup& g) {
  auto s = conjugacy_classes(g).sizes;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("cyclic and dihedral") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(4).order() == 4);
  CHECK(conjugacy_classes(cyclic(4)).count() == 4);
  CHECK(cyclic(6).order() == 6);
  for (std::uint32_t n : {6u, 10u, 14u, 18u, 20u}) CHECK(dihedral(n).order() == n);
  CHECK(dihedral(10).degree() == 5);
  CHECK(conjugacy_classes(dihedral(6)).count() == 3);
  CHECK(derived_subgroup(dihedral(18)).elements.size() == 9);
  CHECK_THROWS_AS(dihedral(9), ConstructionError);
  CHECK_THROWS_AS(cyclic(0), ConstructionError);
}

TEST_CASE("frobenius groups") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 3}, {5, 4}, {13, 4}, {11, 5}, {7, 2}}) {
    CAPTURE(p);
    CAPTURE(k);
    const auto g = frobenius(p, k);
    CHECK(g.order() == p * k);
    const auto d = derived_subgroup(g);
    CHECK(d.elements.size() == p);
    // Abelianization is cyclic of order k.
    const auto q = quotient(g, d.elements);
    CHECK(q.order() == k);
    CHECK(element_order_spectrum(q).back() == k);
  }
  CHECK_THROWS_AS(frobenius(7, 4), ConstructionError);
  CHECK_THROWS_AS(frobenius(9, 2), ConstructionError);
}

TEST_CASE("alternating and symmetric") {
  CHECK(alternating(4).order() == 12);
  CHECK(alternating(5).order() == 60);
  CHECK(alternating(2).order() == 1);
  CHECK(alternating(3).order() == 3);
  CHECK(symmetric(4).order() == 24);
  CHECK(symmetric(2).order() == 2);
  CHECK(alternating(8).order() == 20160);
  CHECK_THROWS_AS(symmetric(10), ConstructionError);
  CHECK_THROWS_AS(alternating(1), ConstructionError);
}

TEST_CASE("linear groups") {
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 19u}) {
    CAPTURE(q);
    const std::uint64_t qq = q;
    CHECK(psl2(q).order() == qq * (qq * qq - 1) / std::gcd<std::uint64_t>(2, qq - 1));
    CHECK(psl2(q).degree() == q + 1);
  }
  CHECK(psl2(8).order() == 504);
  CHECK(psl2(19).order() == 3420);
  CHECK(sl2(5).order() == 120);
  CHECK(sl2(4).order() == 60);
  CHECK(sl2(7).order() == 336);
  CHECK_THROWS_AS(psl2(6), ConstructionError);
  CHECK_THROWS_AS(psl2(3), ConstructionError);
  CHECK_THROWS_AS(psl2(37), ConstructionError);
}

TEST_CASE("PSL(2,4) and A5 share class sizes") {
  CHECK(psl2(4).order() == alternating(5).order());
  CHECK(sorted_sizes(psl2(4)) == sorted_sizes(alternating(5)));
  CHECK(sorted_sizes(psl2(5)) == sorted_sizes(alternating(5)));
}

TEST_CASE("Suzuki group Sz(8)") {
  const auto g = suzuki(8);
  CHECK(g.degree() == 65);
  CHECK(g.order() == 29120);
  CHECK(conjugacy_classes(g).count() == 11);
  CHECK(element_order_spectrum(g) == std::vector<std::uint64_t>{2, 4, 5, 7, 13});
  CHECK_THROWS_AS(suzuki(32), ConstructionError);
}

TEST_CASE("direct products") {
  CHECK(build_group(parse_spec("C2xC2")).order() == 4);
  CHECK(element_order_spectrum(build_group(parse_spec("C2xC2"))) == std::vector<std::uint64_t>{2});
  CHECK(build_group(parse_spec("C3xC3")).order() == 9);
  const auto with_trivial = build_group(parse_spec("C1xA4"));
  CHECK(with_trivial.order() == 12);
  CHECK(sorted_sizes(with_trivial) == sorted_sizes(alternating(4)));
}

TEST_CASE("spec parsing") {
  CHECK(parse_spec("D18") == GroupSpec::dihedral(18));
  CHECK(parse_spec("PSL(2,8)") == GroupSpec::psl2(8));
  CHECK(parse_spec("C3xC3") == GroupSpec::product({GroupSpec::cyclic(3), GroupSpec::cyclic(3)}));
  CHECK(parse_spec("F20") == GroupSpec::frobenius(5, 4));
  CHECK(parse_spec("F21") == GroupSpec::frobenius(7, 3));
  CHECK(parse_spec("F52") == GroupSpec::frobenius(13, 4));
  CHECK(parse_spec("Frob(7,3)") == GroupSpec::frobenius(7, 3));
  CHECK(parse_spec("Sz(8)") == GroupSpec::suzuki(8));
  CHECK(parse_spec("S(4)") == GroupSpec::symmetric(4));
  CHECK(to_string(parse_spec("Frob(7,3)")) == "F21");
  CHECK(to_string(parse_spec("Frob(11,5)")) == "Frob(11,5)");
  CHECK(to_string(parse_spec("S(4)")) == "S4");
}

TEST_CASE("parse, print, parse is the identity") {
  for (const char* text : {"C12", "D18", "F52", "A5", "S4", "PSL(2,19)", "Sz(8)", "Frob(7,3)", "C2xC2", "SL(2,5)",
                           "Frob(11,2)xC4xD6", "C1"}) {
    const auto spec = parse_spec(text);
    CHECK(parse_spec(to_string(spec)) == spec);
    CHECK(to_string(parse_spec(to_string(spec))) == to_string(spec));
  }
}

TEST_CASE("spec errors") {
  auto position = [](const char* text) -> std::size_t {
    try {
      parse_spec(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(position("Q7") == 0);
  CHECK(position("C") == 1);
  CHECK(position("PSL(2,8") == 7);
  CHECK(position("C2xx") == 3);
  CHECK(position("c4") == 0);
  CHECK(position("C4 ") == 2);
  CHECK_THROWS_AS(parse_spec("D17"), SpecError);
  CHECK_THROWS_AS(parse_spec("F15"), SpecError);
  CHECK_THROWS_AS(parse_spec("Frob(7,4)"), SpecError);
  CHECK_THROWS_AS(parse_spec("PSL(3,4)"), SpecError);
  CHECK_THROWS_AS(parse_spec("PSL(2,6)"), SpecError);
  CHECK_THROWS_AS(parse_spec("Sz(2)"), SpecError);
  CHECK_THROWS_AS(parse_spec("A10"), SpecError);
  CHECK_THROWS_AS(parse_spec("C0"), SpecError);
}
