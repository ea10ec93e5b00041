#pragma once

#include <cstdint>
#include <vector>

namespace charfield::oracle {

/// Number of subgroups of index d (d prime) in (Z/n)^*, found by listing the kernels of all
/// surjections onto Z/d. Independent of the rank formula used by count_subfields.
std::uint64_t index_subgroups_of_units(std::uint32_t n, std::uint32_t d);

/// #{1 <= k <= n : gcd(k, n) = 1}.
std::uint64_t totient_by_gcd(std::uint64_t n);

}  // namespace charfield::oracle
