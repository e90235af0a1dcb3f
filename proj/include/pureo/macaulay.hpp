#ifndef PUREO_MACAULAY_HPP
#define PUREO_MACAULAY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <pureo/order_ideal.hpp>

namespace pureo
{

/// One summand C(top, bottom) of a Macaulay representation.
struct binomial_term {
    std::uint64_t top;
    std::uint64_t bottom;

    friend bool operator==(const binomial_term &, const binomial_term &) = default;
};

/// value = sum of C(top_k, k) for k = i, i-1, ..., j with top_i > top_{i-1} > ... > top_j >= j >= 1.
struct macaulay_representation {
    std::uint64_t value;
    std::uint64_t degree;
    std::vector<binomial_term> terms;
};

/// Exact C(n, k). Throws std::overflow_error if the result does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Greedy i-th Macaulay representation of value. Requires value >= 1, i >= 1.
macaulay_representation macaulay_rep(std::uint64_t value, std::uint64_t i);

/// value^<i>: the largest h_{i+1} an order ideal can have when h_i = value.
/// Throws std::overflow_error when the bound exceeds 64 bits.
std::uint64_t macaulay_growth(std::uint64_t value, std::uint64_t i);

/// True iff h_{i+1} <= h_i^<i> for every 1 <= i < n.
bool is_o_sequence(const hvector &h);

/// Smallest i in [1, n) whose growth bound fails, if any.
std::optional<std::size_t> first_macaulay_violation(const hvector &h);

} // namespace pureo

#endif
