#include <pureo/classify.hpp>

#include <limits>
#include <set>
#include <unordered_set>

#include <pureo/macaulay.hpp>

namespace pureo
{

namespace
{

std::uint64_t ceil_div(std::uint64_t x, std::uint64_t d)
{
    return x / d + (x % d != 0);
}

std::uint64_t quadric_count(std::uint64_t a)
{
    try {
        return binomial(a + 1, 2);
    } catch (const std::overflow_error &) {
        return std::numeric_limits<std::uint64_t>::max();
    }
}

var_index to_var(std::uint64_t i)
{
    if (i > std::numeric_limits<var_index>::max()) {
        throw std::length_error("variable index exceeds 32 bits");
    }
    return static_cast<var_index>(i);
}

decision negative(const flat_query &q, std::string_view rule, reason r)
{
    return decision{q, verdict::not_pure, std::string(rule), r, std::nullopt, std::nullopt};
}

decision positive(const flat_query &q, std::string_view rule, generator_set witness)
{
    return decision{q, verdict::pure, std::string(rule), std::nullopt, std::move(witness), std::nullopt};
}

} // namespace

two_part_plan plan_flat(std::uint64_t a, std::uint64_t b)
{
    if (b > a) {
        throw range_error(reason::above_upper_bound, "need b <= a");
    }
    if (2 * b < a) {
        throw range_error(reason::below_lower_bound, "need b >= ceil(a/2)");
    }
    return {a - b, 2 * b - a};
}

three_part_plan plan_socle3(std::uint64_t a, std::uint64_t b)
{
    if (b > a) {
        throw range_error(reason::above_upper_bound, "need b <= a");
    }
    if (3 * b < a) {
        throw range_error(reason::below_lower_bound, "need b >= ceil(a/3)");
    }
    // a - b = 2 * triples + mixed.
    const std::uint64_t triples = (a - b) / 2;
    const std::uint64_t mixed = (a - b) % 2;
    return {triples, mixed, b - triples - mixed};
}

decision decide_flat(const flat_query &q)
{
    if (q.n < 1 || q.a < 1 || q.b < 1) {
        throw std::invalid_argument("flat query needs n, a, b >= 1");
    }
    const auto [n, a, b] = q;
    if (n == 1) {
        if (b > a) {
            return negative(q, rules::n1_convention, reason::above_upper_bound);
        }
        if (b < a) {
            return negative(q, rules::n1_convention, reason::below_lower_bound);
        }
        std::vector<monomial> vars;
        for (std::uint64_t i = 1; i <= a; ++i) {
            vars.push_back(monomial::variable(to_var(i)));
        }
        return positive(q, rules::n1_convention, generator_set(std::move(vars)));
    }
    if (n == 2) {
        if (b < ceil_div(a, 2)) {
            return negative(q, rules::prop_socle2, reason::below_lower_bound);
        }
        if (b > quadric_count(a)) {
            return negative(q, rules::prop_socle2, reason::above_upper_bound);
        }
        return positive(q, rules::prop_socle2, witness_socle2(a, b));
    }
    if (b > a) {
        return negative(q, rules::socle_bound, reason::above_upper_bound);
    }
    if (n == 3) {
        if (b < ceil_div(a, 3)) {
            return negative(q, rules::prop_socle3, reason::below_lower_bound);
        }
        return positive(q, rules::prop_socle3, witness_socle3(a, b));
    }
    if (2 * b < a) {
        return negative(q, rules::twice_socle, reason::exceeds_twice_socle);
    }
    return positive(q, rules::theorem_flat, witness_flat(n, a, b));
}

generator_set witness_flat(std::size_t n, std::uint64_t a, std::uint64_t b)
{
    if (n < 2) {
        throw std::invalid_argument("witness_flat needs n >= 2");
    }
    const auto plan = plan_flat(a, b);
    const auto top = static_cast<exponent_type>(n - 1);
    std::vector<monomial> gens;
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < plan.pairs; ++i, v += 2) {
        gens.push_back(monomial{{to_var(v), 1}, {to_var(v + 1), top}});
    }
    for (std::uint64_t i = 0; i < plan.powers; ++i, ++v) {
        gens.push_back(monomial::variable(to_var(v), static_cast<exponent_type>(n)));
    }
    return generator_set(std::move(gens));
}

generator_set witness_socle3(std::uint64_t a, std::uint64_t b)
{
    const auto plan = plan_socle3(a, b);
    std::vector<monomial> gens;
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < plan.triples; ++i, v += 3) {
        gens.push_back(monomial{{to_var(v), 1}, {to_var(v + 1), 1}, {to_var(v + 2), 1}});
    }
    for (std::uint64_t i = 0; i < plan.mixed; ++i, v += 2) {
        gens.push_back(monomial{{to_var(v), 1}, {to_var(v + 1), 2}});
    }
    for (std::uint64_t i = 0; i < plan.cubes; ++i, ++v) {
        gens.push_back(monomial::variable(to_var(v), 3));
    }
    return generator_set(std::move(gens));
}

generator_set witness_socle2(std::uint64_t a, std::uint64_t b)
{
    if (b < ceil_div(a, 2)) {
        throw range_error(reason::below_lower_bound, "need b >= ceil(a/2)");
    }
    if (b > quadric_count(a)) {
        throw range_error(reason::above_upper_bound, "need b <= C(a+1, 2)");
    }
    std::vector<monomial> gens;
    std::unordered_set<monomial> present;
    auto add = [&](monomial m) {
        if (present.insert(m).second) {
            gens.push_back(std::move(m));
        }
    };
    for (std::uint64_t v = 1; v + 1 <= a; v += 2) {
        add(monomial{{to_var(v), 1}, {to_var(v + 1), 1}});
    }
    if (a % 2 == 1) {
        add(monomial::variable(to_var(a), 2));
    }
    for (std::uint64_t i = 1; i <= a && gens.size() < b; ++i) {
        for (std::uint64_t j = i; j <= a && gens.size() < b; ++j) {
            add(monomial::variable(to_var(i)) * monomial::variable(to_var(j)));
        }
    }
    return generator_set(std::move(gens));
}

pq_profile_result pq_profile(const generator_set &gens)
{
    pq_profile_result out;
    std::set<var_index> seen_vars;
    std::unordered_set<monomial> seen_quadrics;
    for (const auto &u : gens) {
        std::uint64_t p = 0;
        for (auto v : u.support()) {
            p += seen_vars.insert(v).second;
        }
        std::uint64_t q = 0;
        if (u.degree() >= 2) {
            for (auto &d : divisors_of_degree(u, 2)) {
                q += seen_quadrics.insert(std::move(d)).second;
            }
        }
        out.p.push_back(p);
        out.q.push_back(q);
        out.sum_p += p;
        out.sum_q += q;
    }
    return out;
}

bool check_generator_shape(const generator_set &gens, std::uint64_t n)
{
    for (const auto &g : gens) {
        if (g.degree() != n) {
            throw std::invalid_argument("generator " + to_string(g) + " has degree " + std::to_string(g.degree())
                                        + ", expected " + std::to_string(n));
        }
    }
    for (const auto &g : gens) {
        const auto t = g.terms();
        if (t.size() == 1) {
            continue;
        }
        if (t.size() != 2) {
            return false;
        }
        if (!((t[0].exp == 1 && t[1].exp == n - 1) || (t[1].exp == 1 && t[0].exp == n - 1))) {
            return false;
        }
    }
    return true;
}

} // namespace pureo
