#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charfield/cyclo.hpp"
#include "charfield/perm.hpp"

namespace charfield {

/// Class multiplication coefficients a(i, j, k) = #{x in C_i : x^-1 z in C_j} for a fixed z in C_k.
struct ClassCoefficients {
  std::size_t k = 0;
  std::vector<std::uint64_t> data;

  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t l) const { return data[(i * k + j) * k + l]; }
  std::uint64_t& operator()(std::size_t i, std::size_t j, std::size_t l) { return data[(i * k + j) * k + l]; }
};

/// `jobs` worker threads split the target classes; the result does not depend on it.
ClassCoefficients class_multiplication_coefficients(const PermGroup& group, const ClassData& classes,
                                                    unsigned jobs = 1);

/// The k x k slice b[i][j] = #{x in C_i : x^-1 z in C_j} for an arbitrary element z.
std::vector<std::vector<std::uint64_t>> coefficients_at(const PermGroup& group, const ClassData& classes,
                                                        ElementId z);

/// lcm of the class representative orders.
std::uint64_t exponent(const ClassData& classes);

struct CharacterTable {
  ClassData classes;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<Cyclo>> values;  // [row][class]
  std::uint64_t prime = 0;
  /// multiplicities[row][class][d]: chi(g) = sum_d m_d E(o)^d, o the order of the class representative.
  std::vector<std::vector<std::vector<std::uint64_t>>> multiplicities;

  std::size_t size() const { return values.size(); }
  std::uint64_t group_order() const { return classes.group_order; }
};

struct DixonOptions {
  /// Use the (prime_skip + 1)-th admissible prime instead of the first.
  unsigned prime_skip = 0;
  std::uint64_t prime_bound = 100'000'000;
  unsigned jobs = 1;
  std::size_t max_classes = 64;
};

/// Smallest prime p = 1 (mod e) with p^2 > 4 |G|, after skipping `skip` admissible primes.
/// Throws ComputationError when none exists below `bound`.
std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t group_order, unsigned skip = 0,
                          std::uint64_t bound = 100'000'000);

/// Row 0 is the trivial character; the rest are sorted by degree, then by values (Cyclo order) class by class.
CharacterTable dixon_table(const PermGroup& group, const DixonOptions& options = {});
CharacterTable dixon_table(const PermGroup& group, ClassData classes, const DixonOptions& options = {});

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
};

/// Degree sum, row and column orthogonality, first column, Galois closure, integrality.
ValidationReport validate_table(const CharacterTable& table);

}  // namespace charfield
