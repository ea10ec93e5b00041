#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "charfield/perm.hpp"

namespace charfield {

/// Parsed group description. Subscripts follow the order convention:
/// D_n and F_n have order n.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Frobenius, Alternating, Symmetric, PSL2, SL2, Suzuki, Product };

  Kind kind = Kind::Cyclic;
  std::vector<std::uint32_t> args;  // Frobenius: {p, k}; PSL2/SL2/Suzuki: {q}; others: {n}
  std::vector<GroupSpec> factors;   // Product only

  static GroupSpec cyclic(std::uint32_t n) { return {Kind::Cyclic, {n}, {}}; }
  static GroupSpec dihedral(std::uint32_t n) { return {Kind::Dihedral, {n}, {}}; }
  static GroupSpec frobenius(std::uint32_t p, std::uint32_t k) { return {Kind::Frobenius, {p, k}, {}}; }
  static GroupSpec alternating(std::uint32_t n) { return {Kind::Alternating, {n}, {}}; }
  static GroupSpec symmetric(std::uint32_t n) { return {Kind::Symmetric, {n}, {}}; }
  static GroupSpec psl2(std::uint32_t q) { return {Kind::PSL2, {q}, {}}; }
  static GroupSpec sl2(std::uint32_t q) { return {Kind::SL2, {q}, {}}; }
  static GroupSpec suzuki(std::uint32_t q) { return {Kind::Suzuki, {q}, {}}; }
  static GroupSpec product(std::vector<GroupSpec> factors) { return {Kind::Product, {}, std::move(factors)}; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Grammar: spec := atom ("x" atom)* ; atom := NAME NUM | NAME "(" NUM ("," NUM)* ")"
/// with NAME in {C, D, F, A, S, PSL, SL, Sz, Frob}. "F20", "F21", "F52" are sugar for
/// Frob(5,4), Frob(7,3), Frob(13,4); other F_n are rejected as ambiguous.
/// Throws ParseError for syntax errors and SpecError for well-formed text naming no group.
GroupSpec parse_spec(std::string_view text);

/// Canonical text form; parse_spec(to_string(s)) == s.
std::string to_string(const GroupSpec& spec);

/// Checks each constructor's preconditions; throws SpecError naming the violated one.
void check_spec(const GroupSpec& spec);

PermGroup build_group(const GroupSpec& spec);

// Constructors. Each throws ConstructionError when its preconditions fail.
PermGroup cyclic(std::uint32_t n);
/// Dihedral group of order n (n even, n >= 6) acting on n/2 points.
PermGroup dihedral(std::uint32_t n);
/// C_p x| C_k acting on p points by x -> a x + b, with a the smallest residue > 1 of order k mod p.
PermGroup frobenius(std::uint32_t p, std::uint32_t k);
PermGroup alternating(std::uint32_t n);
PermGroup symmetric(std::uint32_t n);
/// Image of SL(2,q) acting on the q+1 points of the projective line.
PermGroup psl2(std::uint32_t q);
/// SL(2,q) acting faithfully on the q^2-1 nonzero vectors of GF(q)^2.
PermGroup sl2(std::uint32_t q);
/// Suzuki group on the q^2+1 points of its ovoid (q = 8 supported).
PermGroup suzuki(std::uint32_t q);
/// Direct product acting on the disjoint union of the factors' point sets.
PermGroup direct_product(const std::vector<PermGroup>& factors);

}  // namespace charfield
