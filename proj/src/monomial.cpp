#include <pureo/monomial.hpp>

#include <algorithm>
#include <charconv>
#include <limits>

namespace pureo
{

monomial::monomial(std::vector<term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const term &a, const term &b) { return a.var < b.var; });
    for (const auto &t : terms) {
        if (t.var == 0) {
            throw std::invalid_argument("variable index must be positive");
        }
        if (t.exp == 0) {
            continue;
        }
        if (!m_terms.empty() && m_terms.back().var == t.var) {
            if (m_terms.back().exp > std::numeric_limits<exponent_type>::max() - t.exp) {
                throw std::overflow_error("exponent overflow");
            }
            m_terms.back().exp += t.exp;
        } else {
            m_terms.push_back(t);
        }
        m_degree += t.exp;
    }
}

monomial monomial::variable(var_index v, exponent_type e)
{
    return monomial{{v, e}};
}

exponent_type monomial::exponent(var_index v) const noexcept
{
    auto it = std::lower_bound(m_terms.begin(), m_terms.end(), v, [](const term &t, var_index x) { return t.var < x; });
    return (it != m_terms.end() && it->var == v) ? it->exp : 0;
}

std::vector<var_index> monomial::support() const
{
    std::vector<var_index> out;
    out.reserve(m_terms.size());
    for (const auto &t : m_terms) {
        out.push_back(t.var);
    }
    return out;
}

monomial operator*(const monomial &a, const monomial &b)
{
    std::vector<term> all(a.m_terms.begin(), a.m_terms.end());
    all.insert(all.end(), b.m_terms.begin(), b.m_terms.end());
    return monomial(std::move(all));
}

bool divides(const monomial &v, const monomial &u) noexcept
{
    if (v.degree() > u.degree()) {
        return false;
    }
    auto ut = u.terms();
    auto it = ut.begin();
    for (const auto &t : v.terms()) {
        while (it != ut.end() && it->var < t.var) {
            ++it;
        }
        if (it == ut.end() || it->var != t.var || it->exp < t.exp) {
            return false;
        }
    }
    return true;
}

namespace
{

void collect_divisors(std::span<const term> terms, std::size_t pos, std::uint64_t remaining, std::uint64_t tail_capacity,
                      std::vector<term> &current, std::vector<monomial> &out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (pos == terms.size() || tail_capacity < remaining) {
        return;
    }
    const auto &t = terms[pos];
    const std::uint64_t rest_capacity = tail_capacity - t.exp;
    const std::uint64_t hi = std::min<std::uint64_t>(t.exp, remaining);
    const std::uint64_t lo = remaining > rest_capacity ? remaining - rest_capacity : 0;
    for (std::uint64_t e = lo; e <= hi; ++e) {
        if (e > 0) {
            current.push_back({t.var, static_cast<exponent_type>(e)});
        }
        collect_divisors(terms, pos + 1, remaining - e, rest_capacity, current, out);
        if (e > 0) {
            current.pop_back();
        }
    }
}

} // namespace

std::vector<monomial> divisors_of_degree(const monomial &u, std::uint64_t d)
{
    if (d > u.degree()) {
        throw std::out_of_range("divisor degree " + std::to_string(d) + " exceeds monomial degree "
                                + std::to_string(u.degree()));
    }
    std::vector<monomial> out;
    std::vector<term> current;
    collect_divisors(u.terms(), 0, d, u.degree(), current, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace
{

std::uint32_t read_int(std::string_view text, std::size_t &pos, const char *what)
{
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        ++pos;
    }
    if (pos == start) {
        throw parse_error(std::string("expected ") + what, start);
    }
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc{}) {
        throw parse_error(std::string(what) + " out of range", start);
    }
    if (value == 0) {
        throw parse_error(std::string(what) + " must be positive", start);
    }
    return value;
}

} // namespace

monomial parse_monomial(std::string_view text)
{
    if (text == "1") {
        return monomial{};
    }
    if (text.empty()) {
        throw parse_error("empty monomial", 0);
    }
    std::vector<term> terms;
    std::size_t pos = 0;
    while (true) {
        if (pos >= text.size() || text[pos] != 'x') {
            throw parse_error("expected 'x'", pos);
        }
        ++pos;
        const auto var = read_int(text, pos, "variable index");
        exponent_type exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = read_int(text, pos, "exponent");
        }
        terms.push_back({var, exp});
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != '*') {
            throw parse_error(std::string("unexpected character '") + text[pos] + "'", pos);
        }
        ++pos;
    }
    return monomial(std::move(terms));
}

std::string to_string(const monomial &m)
{
    if (m.is_unit()) {
        return "1";
    }
    std::string out;
    for (const auto &t : m.terms()) {
        if (!out.empty()) {
            out += '*';
        }
        out += 'x';
        out += std::to_string(t.var);
        if (t.exp != 1) {
            out += '^';
            out += std::to_string(t.exp);
        }
    }
    return out;
}

std::size_t monomial_hash::operator()(const monomial &m) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto &t : m.terms()) {
        h ^= (static_cast<std::size_t>(t.var) << 32) ^ t.exp;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace pureo
