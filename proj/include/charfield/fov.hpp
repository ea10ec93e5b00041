#pragma once

#include <compare>
#include <span>
#include <cstdint>
#include <string>
#include <vector>

#include "charfield/chartab.hpp"

namespace charfield {

/// A subfield of a cyclotomic field: the fixed field of `stabilizer` inside Q_conductor,
/// with the conductor minimal. Q itself is {1, [1], 1}.
struct FieldLabel {
  std::uint64_t conductor = 1;
  std::vector<std::uint64_t> stabilizer{1};
  std::uint64_t degree = 1;

  bool is_rational() const { return degree == 1; }
  std::string to_string() const;

  friend bool operator==(const FieldLabel&, const FieldLabel&) = default;
  friend auto operator<=>(const FieldLabel&, const FieldLabel&) = default;
};

/// Canonical label of the fixed field of a subgroup of (Z/n)^* (given as residues mod n).
FieldLabel field_from_stabilizer(std::uint64_t n, const std::vector<std::uint64_t>& stabilizer);

/// Q(chi) from the power-map stabilizer {k : chi(g^k) = chi(g) for all g}.
FieldLabel field_of_values(const CharacterTable& table, std::size_t row);
/// Q(chi) from the stabilizer {k : sigma_k fixes every value of the row}.
FieldLabel field_of_values_by_galois(const CharacterTable& table, std::size_t row);

struct Bounds {
  std::uint64_t order = 0;
  int floor_log2_log2 = 0;
  double log3 = 0;
  unsigned omega = 0;  // prime factors of the order with multiplicity
};

struct FieldBucket {
  FieldLabel field;
  std::vector<std::size_t> rows;  // row indices into the table
};

struct FReport {
  std::string group;
  std::uint64_t order = 0;
  std::size_t k = 0;
  std::size_t f = 0;
  std::size_t rational = 0;
  std::uint64_t max_field_degree = 0;
  std::vector<std::uint64_t> row_degrees;  // chi(1) per row
  std::vector<FieldBucket> buckets;        // sorted by field label
  Bounds bounds;
};

FReport f_value(const CharacterTable& table, const std::string& group_name = "");
std::size_t rational_count(const CharacterTable& table);

struct CheckResult {
  bool passed = true;
  std::vector<std::string> witnesses;
};

/// max row field degree <= f, and when f <= 3 every quadratic bucket has at most two rows.
CheckResult degree_bound_check(const FReport& report);

/// f(G/N) <= f(G). N must be normal in G.
struct MonotonicityResult {
  std::size_t f_group = 0;
  std::size_t f_quotient = 0;
  bool passed = false;
};
MonotonicityResult monotonicity_check(const PermGroup& group, std::span<const ElementId> normal_subgroup,
                                      const DixonOptions& options = {});

struct BoundRow {
  std::string inequality;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

/// f(G) and k(G) against floor(log2 log2 |G|), log3 |G| and omega(|G|).
std::vector<BoundRow> bounds_report(const FReport& report);

}  // namespace charfield
