#include <pureo/order_ideal.hpp>

#include <algorithm>
#include <charconv>

namespace pureo
{

generator_set::generator_set(std::vector<monomial> gens) : m_gens(std::move(gens))
{
    if (m_gens.empty()) {
        throw std::invalid_argument("generator set must be nonempty");
    }
    std::unordered_set<monomial> seen;
    for (const auto &g : m_gens) {
        if (!seen.insert(g).second) {
            throw std::invalid_argument("duplicate generator " + to_string(g));
        }
    }
}

std::vector<std::string> to_strings(const generator_set &g)
{
    std::vector<std::string> out;
    out.reserve(g.size());
    for (const auto &m : g) {
        out.push_back(to_string(m));
    }
    return out;
}

bool order_ideal::contains(const monomial &m) const
{
    return m.degree() < m_index.size() && m_index[m.degree()].contains(m);
}

std::size_t order_ideal::size() const noexcept
{
    std::size_t total = 0;
    for (const auto &s : m_strata) {
        total += s.size();
    }
    return total;
}

order_ideal closure(const generator_set &gens)
{
    std::uint64_t top = 0;
    for (const auto &g : gens) {
        top = std::max(top, g.degree());
    }
    order_ideal ideal;
    ideal.m_strata.resize(top + 1);
    ideal.m_index.resize(top + 1);
    for (const auto &g : gens) {
        if (ideal.m_index[g.degree()].insert(g).second) {
            ideal.m_strata[g.degree()].push_back(g);
        }
    }
    // Each stratum is complete once every member one degree up has been lowered.
    for (std::uint64_t d = top; d >= 1; --d) {
        auto &lower_index = ideal.m_index[d - 1];
        auto &lower = ideal.m_strata[d - 1];
        for (const auto &m : ideal.m_strata[d]) {
            for (const auto &t : m.terms()) {
                std::vector<term> terms(m.terms().begin(), m.terms().end());
                for (auto &u : terms) {
                    if (u.var == t.var) {
                        --u.exp;
                    }
                }
                monomial lowered(std::move(terms));
                if (!lower_index.contains(lowered)) {
                    lower_index.insert(lowered);
                    lower.push_back(std::move(lowered));
                }
            }
        }
    }
    for (auto &s : ideal.m_strata) {
        std::sort(s.begin(), s.end());
    }
    return ideal;
}

hvector h_vector(const order_ideal &ideal)
{
    std::vector<std::uint64_t> h;
    for (std::uint64_t d = 0; d <= ideal.max_degree(); ++d) {
        h.push_back(ideal.stratum(d).size());
    }
    return hvector(std::move(h));
}

generator_set maximal_elements(const order_ideal &ideal)
{
    std::vector<var_index> vars;
    if (ideal.max_degree() >= 1) {
        for (const auto &x : ideal.stratum(1)) {
            vars.push_back(x.terms().front().var);
        }
    }
    std::vector<monomial> out;
    for (std::uint64_t d = 0; d <= ideal.max_degree(); ++d) {
        for (const auto &m : ideal.stratum(d)) {
            const bool covered = std::any_of(vars.begin(), vars.end(), [&](var_index v) {
                return ideal.contains(m * monomial::variable(v));
            });
            if (!covered) {
                out.push_back(m);
            }
        }
    }
    return generator_set(std::move(out));
}

bool is_pure(const order_ideal &ideal)
{
    const auto maxes = maximal_elements(ideal);
    return std::all_of(maxes.begin(), maxes.end(), [&](const monomial &m) { return m.degree() == maxes[0].degree(); });
}

hvector::hvector(std::vector<std::uint64_t> entries) : m_entries(std::move(entries))
{
    if (m_entries.empty() || m_entries.front() != 1) {
        throw hvector_error(hvector_error::kind::malformed, "h-vector must start with h_0 = 1");
    }
    for (std::size_t i = 0; i < m_entries.size(); ++i) {
        if (m_entries[i] == 0) {
            throw hvector_error(hvector_error::kind::zero_entry,
                                "h-vector entry h_" + std::to_string(i) + " is zero; entries must be positive");
        }
    }
}

hvector flat_hvector(std::size_t n, std::uint64_t a, std::uint64_t b)
{
    if (n == 0) {
        throw std::invalid_argument("flat sequence needs n >= 1");
    }
    std::vector<std::uint64_t> h(n + 1, a);
    h.front() = 1;
    h.back() = b;
    return hvector(std::move(h));
}

hvector parse_hvector(std::string_view text)
{
    std::vector<std::uint64_t> entries;
    std::size_t pos = 0;
    while (true) {
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            ++pos;
        }
        if (pos == start) {
            throw parse_error("expected integer", start);
        }
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, v);
        if (ec != std::errc{}) {
            throw parse_error("integer out of range", start);
        }
        entries.push_back(v);
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != ',') {
            throw parse_error(std::string("unexpected character '") + text[pos] + "'", pos);
        }
        ++pos;
    }
    return hvector(std::move(entries));
}

std::string to_string(const hvector &h)
{
    std::string out;
    for (auto v : h.entries()) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(v);
    }
    return out;
}

} // namespace pureo
