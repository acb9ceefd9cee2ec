#include "hgs/mdl.hpp"

#include <cmath>
#include <stdexcept>

namespace hgs::mdl {

namespace {
constexpr double kLn2 = 0.69314718055994530941723212145818;

double log2_factorial(std::uint64_t n) {
    return std::lgamma(static_cast<double>(n) + 1.0) / kLn2;
}
}  // namespace

Bits universal_int_code_len(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("universal_int_code_len: n must be >= 1");
    double bits = std::log2(kUniversalCodeConstant);
    double term = std::log2(static_cast<double>(n));
    while (term > 0.0) {
        bits += term;
        term = std::log2(term);
    }
    return bits;
}

Bits log2_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::invalid_argument("log2_binomial: k must be <= n");
    if (k == 0 || k == n) return 0.0;
    return log2_factorial(n) - log2_factorial(k) - log2_factorial(n - k);
}

Bits weak_composition_code_len(std::uint64_t total, std::uint64_t parts) {
    if (parts < 1) throw std::invalid_argument("weak_composition_code_len: parts must be >= 1");
    return log2_binomial(total + parts - 1, parts - 1);
}

Bits prefix_code_cost(std::uint64_t ones, std::uint64_t zeros) {
    if (ones == 0 || zeros == 0) return 0.0;
    const double total = static_cast<double>(ones) + static_cast<double>(zeros);
    const double e1 = -std::log2(static_cast<double>(ones) / total);
    const double e0 = -std::log2(static_cast<double>(zeros) / total);
    return static_cast<double>(ones) * e1 + static_cast<double>(zeros) * e0;
}

Bits nonzero_count_bits(std::uint64_t count) {
    return count == 0 ? 0.0 : std::log2(static_cast<double>(count));
}

}  // namespace hgs::mdl
