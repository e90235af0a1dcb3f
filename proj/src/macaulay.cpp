#include <pureo/macaulay.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace pureo
{

namespace
{

constexpr std::uint64_t u64_max = std::numeric_limits<std::uint64_t>::max();

// C(n, k), or nullopt once the running product passes cap.
std::optional<std::uint64_t> binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
        // r holds C(n - k + j - 1, j - 1); the next value is exact after division.
        r = r * (n - k + j) / j;
        if (r > cap) {
            return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t greedy_top(std::uint64_t value, std::uint64_t k)
{
    if (k == 1) {
        return value;
    }
    auto fits = [&](std::uint64_t a) { return binomial_capped(a, k, value).has_value(); };
    std::uint64_t lo = k;
    std::uint64_t step = 1;
    while (lo <= u64_max - step && fits(lo + step)) {
        lo += step;
        step *= 2;
    }
    // lo fits; lo + step does not (or would overflow).
    std::uint64_t hi = lo <= u64_max - step ? lo + step : u64_max;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (fits(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

std::optional<std::uint64_t> checked_growth(std::uint64_t value, std::uint64_t i)
{
    const auto rep = macaulay_rep(value, i);
    std::uint64_t total = 0;
    for (const auto &t : rep.terms) {
        if (t.top == u64_max) {
            return std::nullopt;
        }
        const auto c = binomial_capped(t.top + 1, t.bottom + 1, u64_max - 1);
        if (!c || *c > u64_max - total) {
            return std::nullopt;
        }
        total += *c;
    }
    return total;
}

} // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    const auto c = binomial_capped(n, k, u64_max);
    if (!c) {
        throw std::overflow_error("C(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds 64 bits");
    }
    return *c;
}

macaulay_representation macaulay_rep(std::uint64_t value, std::uint64_t i)
{
    if (value == 0 || i == 0) {
        throw std::invalid_argument("Macaulay representation needs value >= 1 and i >= 1");
    }
    macaulay_representation rep{value, i, {}};
    std::uint64_t rest = value;
    for (std::uint64_t k = i; k >= 1 && rest > 0; --k) {
        const auto top = greedy_top(rest, k);
        rep.terms.push_back({top, k});
        rest -= *binomial_capped(top, k, u64_max);
    }
    return rep;
}

std::uint64_t macaulay_growth(std::uint64_t value, std::uint64_t i)
{
    const auto g = checked_growth(value, i);
    if (!g) {
        throw std::overflow_error("Macaulay bound of " + std::to_string(value) + " in degree " + std::to_string(i)
                                  + " exceeds 64 bits");
    }
    return *g;
}

std::optional<std::size_t> first_macaulay_violation(const hvector &h)
{
    const auto e = h.entries();
    for (std::size_t i = 1; i + 1 < e.size(); ++i) {
        // An overflowing bound exceeds every representable h_{i+1}.
        const auto g = checked_growth(e[i], i);
        if (g && e[i + 1] > *g) {
            return i;
        }
    }
    return std::nullopt;
}

bool is_o_sequence(const hvector &h)
{
    return !first_macaulay_violation(h).has_value();
}

} // namespace pureo
