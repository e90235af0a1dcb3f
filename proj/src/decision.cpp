#include <pureo/decision.hpp>

namespace pureo
{

std::string_view to_string(verdict v) noexcept
{
    switch (v) {
        case verdict::pure:
            return "Pure";
        case verdict::not_pure:
            return "NotPure";
        case verdict::inconclusive:
            return "Inconclusive";
    }
    return "?";
}

std::string_view to_string(reason r) noexcept
{
    switch (r) {
        case reason::below_lower_bound:
            return "BelowLowerBound";
        case reason::above_upper_bound:
            return "AboveUpperBound";
        case reason::exceeds_twice_socle:
            return "ExceedsTwiceSocle";
        case reason::macaulay_violation:
            return "MacaulayViolation";
        case reason::search_exhausted:
            return "SearchExhausted";
    }
    return "?";
}

hvector decision::sequence() const
{
    if (const auto *q = std::get_if<flat_query>(&query)) {
        return flat_hvector(q->n, q->a, q->b);
    }
    return std::get<hvector>(query);
}

nlohmann::ordered_json to_json(const decision &d, bool include_witness)
{
    nlohmann::ordered_json j;
    if (const auto *q = std::get_if<flat_query>(&d.query)) {
        j["query"] = {{"n", q->n}, {"a", q->a}, {"b", q->b}};
    } else {
        const auto e = std::get<hvector>(d.query).entries();
        j["query"] = {{"h", std::vector<std::uint64_t>(e.begin(), e.end())}};
    }
    j["verdict"] = to_string(d.outcome);
    j["rule"] = d.rule;
    if (d.why) {
        j["reason"] = to_string(*d.why);
    }
    if (d.exhausted_budget) {
        j["budget"] = *d.exhausted_budget;
    }
    if (include_witness && d.witness) {
        j["witness"] = to_strings(*d.witness);
    }
    return j;
}

bool witness_realizes(const decision &d)
{
    return d.witness && h_vector(closure(*d.witness)) == d.sequence();
}

} // namespace pureo
