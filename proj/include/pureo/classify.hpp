#ifndef PUREO_CLASSIFY_HPP
#define PUREO_CLASSIFY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <pureo/decision.hpp>
#include <pureo/order_ideal.hpp>

namespace pureo
{

// A witness constructor was asked for a sequence outside its family.
class range_error : public std::domain_error
{
public:
    range_error(reason r, const std::string &what) : std::domain_error(what), m_reason(r) {}
    pureo::reason why() const noexcept
    {
        return m_reason;
    }

private:
    pureo::reason m_reason;
};

/// a = 2 * pairs + powers, b = pairs + powers.
struct two_part_plan {
    std::uint64_t pairs;
    std::uint64_t powers;
};

/// a = 3 * triples + 2 * mixed + cubes, b = triples + mixed + cubes.
struct three_part_plan {
    std::uint64_t triples;
    std::uint64_t mixed;
    std::uint64_t cubes;
};

two_part_plan plan_flat(std::uint64_t a, std::uint64_t b);
/// Greedy: as many triples as possible, then as many mixed terms.
three_part_plan plan_socle3(std::uint64_t a, std::uint64_t b);

/// Closed-form classification of (1, a, ..., a, b).
decision decide_flat(const flat_query &q);

/// x1*x2^(n-1), x3*x4^(n-1), ... then pure n-th powers on fresh variables.
/// Requires n >= 2 and ceil(a/2) <= b <= a.
generator_set witness_flat(std::size_t n, std::uint64_t a, std::uint64_t b);

/// Square-free triples, then y1*y2^2 terms, then cubes, on disjoint variables.
/// Requires ceil(a/3) <= b <= a.
generator_set witness_socle3(std::uint64_t a, std::uint64_t b);

/// Disjoint pairs covering all a variables (with x_a^2 when a is odd), then
/// further quadrics x_i*x_j, i <= j, in lexicographic order.
/// Requires ceil(a/2) <= b <= C(a+1, 2).
generator_set witness_socle2(std::uint64_t a, std::uint64_t b);

/// Counts of new variables (p) and new quadratic divisors (q) contributed by
/// each generator relative to those before it.
struct pq_profile_result {
    std::vector<std::uint64_t> p;
    std::vector<std::uint64_t> q;
    std::uint64_t sum_p = 0;
    std::uint64_t sum_q = 0;
};

pq_profile_result pq_profile(const generator_set &gens);

/// True iff every generator is x^n or x*y^(n-1) with x != y.
/// Throws std::invalid_argument if some generator has degree != n.
bool check_generator_shape(const generator_set &gens, std::uint64_t n);

} // namespace pureo

#endif
