#pragma once

#include <cstdint>

namespace hgs::mdl {

// All code lengths are in bits (base-2 logarithms throughout).
using Bits = double;

// Rissanen constant for the universal integer code.
inline constexpr double kUniversalCodeConstant = 2.865064;

// Universal code length for integers n >= 1:
// log2(c0) + log2 n + log2 log2 n + ... keeping only strictly positive terms.
Bits universal_int_code_len(std::uint64_t n);

// log2 of the binomial coefficient C(n, k), 0 <= k <= n. Stable up to n ~ 1e7.
Bits log2_binomial(std::uint64_t n, std::uint64_t k);

// Index length over a weak composition of `total` into `parts` parts:
// log2 C(total + parts - 1, parts - 1).
Bits weak_composition_code_len(std::uint64_t total, std::uint64_t parts);

// Total length of transmitting `ones` + `zeros` symbols under the optimal
// binary prefix code for their empirical distribution. A symbol with zero
// count contributes nothing; both zero yields 0.
Bits prefix_code_cost(std::uint64_t ones, std::uint64_t zeros);

// log2(count) with the 0-when-empty convention used by the error encodings.
Bits nonzero_count_bits(std::uint64_t count);

}  // namespace hgs::mdl
