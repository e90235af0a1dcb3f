#include "search_engine.hpp"

#include <numeric>
#include <unordered_map>

namespace pureo::detail
{

namespace
{

constexpr std::size_t max_table_entries = 25'000'000;

std::uint64_t pack(std::span<const std::uint8_t> e)
{
    std::uint64_t key = 0;
    for (auto x : e) {
        key = (key << 8) | x;
    }
    return key;
}

// Exponent vectors of total degree `remaining` over positions [pos, s), larger leading entries first.
void degree_vectors(unsigned s, unsigned pos, unsigned remaining, std::vector<std::uint8_t> &cur,
                    std::vector<std::vector<std::uint8_t>> &out)
{
    if (pos + 1 == s) {
        cur[pos] = static_cast<std::uint8_t>(remaining);
        out.push_back(cur);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur[pos] = static_cast<std::uint8_t>(e);
        degree_vectors(s, pos + 1, remaining - e, cur, out);
    }
    cur[pos] = 0;
}

void bounded_divisors(std::span<const std::uint8_t> e, unsigned pos, unsigned remaining, std::vector<std::uint8_t> &cur,
                      std::vector<std::uint64_t> &keys)
{
    if (pos == e.size()) {
        if (remaining == 0) {
            keys.push_back(pack(cur));
        }
        return;
    }
    for (unsigned x = 0; x <= std::min<unsigned>(e[pos], remaining); ++x) {
        cur[pos] = static_cast<std::uint8_t>(x);
        bounded_divisors(e, pos + 1, remaining - x, cur, keys);
    }
    cur[pos] = 0;
}

} // namespace

universe::universe(unsigned s, unsigned n) : m_s(s), m_n(n)
{
    if (s < 1 || s > 8) {
        throw guardrail_error("search supports 1 to 8 variables, got " + std::to_string(s));
    }
    if (n < 1 || n > 255) {
        throw guardrail_error("search supports degrees 1 to 255, got " + std::to_string(n));
    }
    // Size check before materializing: C(n + s - 1, s - 1).
    {
        std::uint64_t count = 1;
        for (unsigned k = 1; k < s; ++k) {
            count = count * (n + k) / k;
            if (count > std::numeric_limits<mono_id>::max()) {
                throw guardrail_error("too many degree-" + std::to_string(n) + " monomials on " + std::to_string(s)
                                      + " variables");
            }
        }
        std::uint64_t perms = 1;
        for (unsigned k = 2; k <= s; ++k) {
            perms *= k;
        }
        if (perms * count > max_table_entries) {
            throw guardrail_error("permutation table for " + std::to_string(s) + " variables in degree "
                                  + std::to_string(n) + " exceeds the size limit");
        }
    }

    std::vector<std::uint8_t> cur(s, 0);
    degree_vectors(s, 0, n, cur, m_exponents);
    m_size = m_exponents.size();

    std::unordered_map<std::uint64_t, mono_id> index;
    for (std::size_t m = 0; m < m_size; ++m) {
        index.emplace(pack(m_exponents[m]), static_cast<mono_id>(m));
        std::vector<std::uint8_t> sup;
        for (unsigned v = 0; v < s; ++v) {
            if (m_exponents[m][v] != 0) {
                sup.push_back(static_cast<std::uint8_t>(v));
            }
        }
        m_top.push_back(sup.back() + 1u);
        m_support.push_back(std::move(sup));
    }

    m_divisors.resize(n);
    m_stratum_size.assign(n + 1, 0);
    m_stratum_size[0] = 1;
    m_stratum_size[n] = m_size;
    for (unsigned d = 1; d < n; ++d) {
        std::unordered_map<std::uint64_t, std::uint32_t> ids;
        m_divisors[d].resize(m_size);
        std::vector<std::uint64_t> keys;
        for (std::size_t m = 0; m < m_size; ++m) {
            keys.clear();
            bounded_divisors(m_exponents[m], 0, d, cur, keys);
            for (auto k : keys) {
                auto [it, fresh] = ids.emplace(k, static_cast<std::uint32_t>(ids.size()));
                m_divisors[d][m].push_back(it->second);
            }
        }
        m_stratum_size[d] = ids.size();
    }

    std::vector<unsigned> perm(s);
    std::iota(perm.begin(), perm.end(), 0u);
    m_perms_within.resize(s + 1);
    std::vector<std::uint8_t> image(s);
    std::uint32_t p = 0;
    do {
        unsigned moved_below = 0;
        for (unsigned v = 0; v < s; ++v) {
            if (perm[v] != v) {
                moved_below = v + 1;
            }
        }
        if (moved_below > 0) {
            for (unsigned u = moved_below; u <= s; ++u) {
                m_perms_within[u].push_back(p);
            }
        }
        for (std::size_t m = 0; m < m_size; ++m) {
            for (unsigned v = 0; v < s; ++v) {
                image[perm[v]] = m_exponents[m][v];
            }
            m_images.push_back(index.at(pack(image)));
        }
        ++p;
    } while (std::next_permutation(perm.begin(), perm.end()));
}

monomial universe::to_monomial(mono_id m) const
{
    std::vector<term> terms;
    for (unsigned v = 0; v < m_s; ++v) {
        if (m_exponents[m][v] != 0) {
            terms.push_back({v + 1, m_exponents[m][v]});
        }
    }
    return monomial(std::move(terms));
}

search_state::search_state(const universe &u)
    : m_universe(u), m_refs(u.degree()), m_counts(u.degree() + 1, 0), m_var_refs(u.variables(), 0)
{
    m_counts[0] = 1;
    for (unsigned d = 1; d < u.degree(); ++d) {
        m_refs[d].assign(u.stratum_size(d), 0);
    }
}

void search_state::push(mono_id m)
{
    const unsigned n = m_universe.degree();
    for (unsigned d = 1; d < n; ++d) {
        auto &refs = m_refs[d];
        for (auto div : m_universe.divisors(m, d)) {
            m_counts[d] += (refs[div]++ == 0);
        }
    }
    for (auto v : m_universe.support(m)) {
        m_vars_used += (m_var_refs[v]++ == 0);
    }
    m_top.push_back(m_top.empty() ? m_universe.top_var(m) : std::max(m_top.back(), m_universe.top_var(m)));
    m_chosen.push_back(m);
    ++m_counts[n];
}

void search_state::pop()
{
    const unsigned n = m_universe.degree();
    const mono_id m = m_chosen.back();
    for (unsigned d = 1; d < n; ++d) {
        auto &refs = m_refs[d];
        for (auto div : m_universe.divisors(m, d)) {
            m_counts[d] -= (--refs[div] == 0);
        }
    }
    for (auto v : m_universe.support(m)) {
        m_vars_used -= (--m_var_refs[v] == 0);
    }
    m_top.pop_back();
    m_chosen.pop_back();
    --m_counts[n];
}

bool is_canonical(const universe &u, const search_state &st, std::vector<mono_id> &scratch)
{
    const auto ids = st.chosen();
    scratch.resize(ids.size());
    for (auto p : u.perms_within(st.variables_used())) {
        const mono_id *row = u.image_row(p);
        mono_id least = std::numeric_limits<mono_id>::max();
        for (auto m : ids) {
            least = std::min(least, row[m]);
        }
        if (least > ids[0]) {
            continue;
        }
        if (least < ids[0]) {
            return false;
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            scratch[i] = row[ids[i]];
        }
        std::sort(scratch.begin(), scratch.end());
        if (std::lexicographical_compare(scratch.begin(), scratch.end(), ids.begin(), ids.end())) {
            return false;
        }
    }
    return true;
}

generator_set to_generator_set(const universe &u, std::span<const mono_id> ids)
{
    std::vector<monomial> out;
    for (auto m : ids) {
        out.push_back(u.to_monomial(m));
    }
    return generator_set(std::move(out));
}

} // namespace pureo::detail
