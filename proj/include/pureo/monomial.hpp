#ifndef PUREO_MONOMIAL_HPP
#define PUREO_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pureo
{

using var_index = std::uint32_t;
using exponent_type = std::uint32_t;

/// A (variable, exponent) pair with exponent >= 1.
struct term {
    var_index var;
    exponent_type exp;

    friend bool operator==(const term &, const term &) = default;
    friend auto operator<=>(const term &, const term &) = default;
};

// Raised by the text grammars; position is a 0-based offset into the input.
class parse_error : public std::invalid_argument
{
public:
    parse_error(const std::string &what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), m_position(position)
    {
    }
    std::size_t position() const noexcept
    {
        return m_position;
    }

private:
    std::size_t m_position;
};

/// Monic monomial in indexed variables x1, x2, ...
///
/// Stored as a sparse list of terms sorted by variable index. Zero exponents
/// are never stored, so the unit monomial is the empty list and structural
/// equality of the term list is equality of monomials.
class monomial
{
public:
    monomial() = default;

    /// Builds from (var, exp) pairs in any order. Repeated variables
    /// accumulate; zero exponents are dropped. Variable index 0 is rejected.
    explicit monomial(std::vector<term> terms);
    monomial(std::initializer_list<term> terms) : monomial(std::vector<term>(terms)) {}

    static monomial variable(var_index v, exponent_type e = 1);

    std::span<const term> terms() const noexcept
    {
        return m_terms;
    }
    std::uint64_t degree() const noexcept
    {
        return m_degree;
    }
    bool is_unit() const noexcept
    {
        return m_terms.empty();
    }
    exponent_type exponent(var_index v) const noexcept;
    std::vector<var_index> support() const;

    friend monomial operator*(const monomial &, const monomial &);

    friend bool operator==(const monomial &a, const monomial &b) noexcept
    {
        return a.m_terms == b.m_terms;
    }
    // Total order used for containers only; it is not a term order.
    friend std::strong_ordering operator<=>(const monomial &a, const monomial &b) noexcept
    {
        if (auto c = a.m_degree <=> b.m_degree; c != 0) {
            return c;
        }
        return a.m_terms <=> b.m_terms;
    }

private:
    std::vector<term> m_terms;
    std::uint64_t m_degree = 0;
};

inline std::uint64_t degree(const monomial &m) noexcept
{
    return m.degree();
}

inline std::vector<var_index> support(const monomial &m)
{
    return m.support();
}

/// True iff every exponent of v is at most the matching exponent of u.
bool divides(const monomial &v, const monomial &u) noexcept;

/// All degree-d divisors of u, sorted. Throws std::out_of_range if d > deg(u).
std::vector<monomial> divisors_of_degree(const monomial &u, std::uint64_t d);

/// Parses `1` or `x<i>[^<e>]` factors joined by `*`; no whitespace.
monomial parse_monomial(std::string_view text);

/// Canonical print: increasing variable index, `^1` omitted, unit as `1`.
std::string to_string(const monomial &m);

struct monomial_hash {
    std::size_t operator()(const monomial &m) const noexcept;
};

} // namespace pureo

template <>
struct std::hash<pureo::monomial> : pureo::monomial_hash {
};

#endif
