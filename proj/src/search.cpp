#include <pureo/search.hpp>

#include <map>

#include <pureo/classify.hpp>
#include <pureo/macaulay.hpp>

#include "search_engine.hpp"

namespace pureo
{

namespace
{

using detail::mono_id;
using detail::search_state;

// Looks for h_n generators whose divisor counts match the target in every degree.
class witness_policy
{
public:
    explicit witness_policy(std::vector<std::uint64_t> target, std::size_t universe_size)
        : m_target(std::move(target)), m_n(static_cast<unsigned>(m_target.size() - 1)), m_universe_size(universe_size)
    {
    }

    bool admissible(const search_state &st) const
    {
        const std::uint64_t k = st.size();
        if (k > m_target[m_n]) {
            return false;
        }
        for (unsigned d = 1; d < m_n; ++d) {
            if (st.count(d) > m_target[d]) {
                return false;
            }
        }
        // Each further generator brings at most n new variables.
        return m_target[1] - st.variables_used() <= static_cast<std::uint64_t>(m_n) * (m_target[m_n] - k);
    }

    std::size_t candidate_end(const search_state &st) const
    {
        const std::uint64_t needed = m_target[m_n] - st.size();
        if (needed == 0) {
            return 0;
        }
        return needed - 1 > m_universe_size ? 0 : m_universe_size - (needed - 1);
    }

    bool wants_children(const search_state &st) const
    {
        return st.size() < m_target[m_n];
    }

    bool visit(const search_state &st, std::uint64_t)
    {
        if (st.size() != m_target[m_n] || st.h() != m_target) {
            return false;
        }
        m_found.assign(st.chosen().begin(), st.chosen().end());
        return true;
    }

    bool hit() const noexcept
    {
        return !m_found.empty();
    }
    const std::vector<mono_id> &found() const noexcept
    {
        return m_found;
    }

private:
    std::vector<std::uint64_t> m_target;
    unsigned m_n;
    std::size_t m_universe_size;
    std::vector<mono_id> m_found;
};

// Records the first node (in preorder) realizing each h-vector.
class catalog_policy
{
public:
    struct first_seen {
        std::uint64_t rank;
        std::vector<mono_id> ids;
    };

    explicit catalog_policy(std::size_t max_generators) : m_max(max_generators) {}

    bool admissible(const search_state &) const
    {
        return true;
    }
    std::size_t candidate_end(const search_state &) const
    {
        return std::numeric_limits<std::size_t>::max();
    }
    bool wants_children(const search_state &st) const
    {
        return st.size() < m_max;
    }
    bool visit(const search_state &st, std::uint64_t rank)
    {
        m_seen.try_emplace(st.h(), first_seen{rank, {st.chosen().begin(), st.chosen().end()}});
        return false;
    }
    bool hit() const noexcept
    {
        return false;
    }
    const std::map<std::vector<std::uint64_t>, first_seen> &seen() const noexcept
    {
        return m_seen;
    }

private:
    std::size_t m_max;
    std::map<std::vector<std::uint64_t>, first_seen> m_seen;
};

decision answer(const hvector &h, verdict v, std::string_view rule)
{
    return decision{h, v, std::string(rule), std::nullopt, std::nullopt, std::nullopt};
}

decision inconclusive(const hvector &h, std::string budget)
{
    auto d = answer(h, verdict::inconclusive, rules::exhaustive_search);
    d.exhausted_budget = std::move(budget);
    return d;
}

decision rejected(const hvector &h, std::string_view rule, reason r)
{
    auto d = answer(h, verdict::not_pure, rule);
    d.why = r;
    return d;
}

} // namespace

decision decide_pure_o_sequence(const hvector &h, const search_limits &limits, const search_options &options)
{
    const std::size_t n = h.socle_degree();
    if (n == 0) {
        auto d = answer(h, verdict::pure, rules::exhaustive_search);
        d.witness = generator_set({monomial{}});
        return d;
    }
    if (first_macaulay_violation(h)) {
        return rejected(h, rules::macaulay, reason::macaulay_violation);
    }
    const std::uint64_t h1 = h[1];
    const std::uint64_t hn = h[n];
    if ((h1 + n - 1) / n > hn) {
        return rejected(h, rules::variable_coverage, reason::below_lower_bound);
    }
    // With h_1 = h_2 in degree >= 4 every generator adds at most two new variables.
    if (options.use_pq_bound && n >= 4 && h1 == h[2] && (h1 + 1) / 2 > hn) {
        return rejected(h, rules::twice_socle, reason::exceeds_twice_socle);
    }
    if (h1 > limits.max_variables) {
        return inconclusive(h, "max_variables");
    }
    if (hn > limits.max_generators) {
        return inconclusive(h, "max_generators");
    }

    std::optional<detail::universe> u;
    try {
        u.emplace(static_cast<unsigned>(h1), static_cast<unsigned>(n));
    } catch (const guardrail_error &) {
        return inconclusive(h, "tables");
    }

    detail::run_control control(limits.node_budget, limits.time_budget);
    const witness_policy prototype(std::vector<std::uint64_t>(h.entries().begin(), h.entries().end()), u->size());
    const auto outcomes = detail::run_tasks(*u, prototype, control, options.jobs, true);
    if (!outcomes) {
        return inconclusive(h, control.exhausted_budget());
    }
    for (const auto &o : *outcomes) {
        if (o.policy.hit()) {
            auto d = answer(h, verdict::pure, rules::exhaustive_search);
            d.witness = detail::to_generator_set(*u, o.policy.found());
            return d;
        }
        if (!o.complete) {
            return inconclusive(h, control.exhausted_budget());
        }
    }
    return rejected(h, rules::exhaustive_search, reason::search_exhausted);
}

std::vector<catalog_entry> enumerate_pure_hvectors(unsigned s, unsigned n, unsigned g, const search_options &options)
{
    if (s < 1 || n < 1 || g < 1) {
        throw std::invalid_argument("enumeration needs s, n, g >= 1");
    }
    if (g > 64) {
        throw guardrail_error("enumeration supports at most 64 generators");
    }
    const detail::universe u(s, n);
    detail::run_control control(std::numeric_limits<std::uint64_t>::max(), std::chrono::hours(24 * 365));
    const auto outcomes = detail::run_tasks(u, catalog_policy(g), control, options.jobs, false);
    if (!outcomes) {
        throw std::runtime_error("enumeration aborted");
    }

    std::map<std::vector<std::uint64_t>, catalog_policy::first_seen> merged;
    std::uint64_t offset = 0;
    for (const auto &o : *outcomes) {
        for (const auto &[h, seen] : o.policy.seen()) {
            const std::uint64_t rank = offset + seen.rank;
            auto it = merged.find(h);
            if (it == merged.end()) {
                merged.emplace(h, catalog_policy::first_seen{rank, seen.ids});
            } else if (rank < it->second.rank) {
                it->second = {rank, seen.ids};
            }
        }
        offset += o.nodes;
    }

    std::vector<catalog_entry> out;
    for (const auto &[h, seen] : merged) {
        out.push_back({hvector(h), detail::to_generator_set(u, seen.ids), h[1], h[n], seen.rank});
    }
    return out;
}

verify_report verify_theorem_range(std::size_t n, std::uint64_t a_max, std::uint64_t b_max, const search_limits &limits,
                                   const search_options &options)
{
    if (n < 2) {
        throw std::invalid_argument("verification sweeps need n >= 2");
    }
    verify_report report{n, a_max, b_max, {}, 0, 0, 0};
    for (std::uint64_t a = 1; a <= a_max; ++a) {
        for (std::uint64_t b = 1; b <= b_max; ++b) {
            auto expected = decide_flat({n, a, b});
            auto oracle = decide_pure_o_sequence(flat_hvector(n, a, b), limits, options);
            bool agree = false;
            if (oracle.outcome == verdict::inconclusive) {
                ++report.inconclusive;
            } else if (oracle.outcome == expected.outcome) {
                agree = true;
                ++report.agreements;
            } else {
                ++report.disagreements;
            }
            report.cells.push_back({a, b, std::move(expected), std::move(oracle), agree});
        }
    }
    return report;
}

nlohmann::ordered_json to_json(const verify_report &r)
{
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["a_max"] = r.a_max;
    j["b_max"] = r.b_max;
    j["agreements"] = r.agreements;
    j["disagreements"] = r.disagreements;
    j["inconclusive"] = r.inconclusive;
    auto cells = nlohmann::ordered_json::array();
    for (const auto &c : r.cells) {
        nlohmann::ordered_json cell;
        cell["a"] = c.a;
        cell["b"] = c.b;
        cell["expected"] = to_string(c.expected.outcome);
        cell["expected_rule"] = c.expected.rule;
        cell["oracle"] = to_string(c.oracle.outcome);
        cell["oracle_rule"] = c.oracle.rule;
        cell["agree"] = c.agree;
        if (c.oracle.witness) {
            cell["witness"] = to_strings(*c.oracle.witness);
        }
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    return j;
}

} // namespace pureo
