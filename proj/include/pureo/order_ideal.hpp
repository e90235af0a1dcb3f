#ifndef PUREO_ORDER_IDEAL_HPP
#define PUREO_ORDER_IDEAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <pureo/monomial.hpp>

namespace pureo
{

/// Nonempty ordered list of distinct monomials.
///
/// Order is preserved as given: it is the witness print order and the
/// generator order used by pq_profile().
class generator_set
{
public:
    /// Throws std::invalid_argument if empty or if a monomial repeats.
    explicit generator_set(std::vector<monomial> gens);

    std::span<const monomial> generators() const noexcept
    {
        return m_gens;
    }
    std::size_t size() const noexcept
    {
        return m_gens.size();
    }
    const monomial &operator[](std::size_t i) const
    {
        return m_gens[i];
    }
    auto begin() const noexcept
    {
        return m_gens.begin();
    }
    auto end() const noexcept
    {
        return m_gens.end();
    }

    friend bool operator==(const generator_set &, const generator_set &) = default;

private:
    std::vector<monomial> m_gens;
};

std::vector<std::string> to_strings(const generator_set &g);

/// Finite downward-closed set of monomials, kept stratified by degree.
class order_ideal
{
public:
    std::uint64_t max_degree() const noexcept
    {
        return m_strata.size() - 1;
    }
    /// Members of degree d in sorted order.
    std::span<const monomial> stratum(std::uint64_t d) const
    {
        return m_strata.at(d);
    }
    bool contains(const monomial &m) const;
    std::size_t size() const noexcept;

    friend order_ideal closure(const generator_set &gens);

private:
    std::vector<std::vector<monomial>> m_strata;
    std::vector<std::unordered_set<monomial>> m_index;
};

// An h-vector is rejected unless h_0 = 1 and every entry is positive.
class hvector_error : public std::invalid_argument
{
public:
    enum class kind { malformed, zero_entry };
    hvector_error(kind k, const std::string &what) : std::invalid_argument(what), m_kind(k) {}
    kind error_kind() const noexcept
    {
        return m_kind;
    }

private:
    kind m_kind;
};

/// Degree-wise member counts (h_0, ..., h_n) with h_0 = 1 and all h_i >= 1.
class hvector
{
public:
    explicit hvector(std::vector<std::uint64_t> entries);

    std::span<const std::uint64_t> entries() const noexcept
    {
        return m_entries;
    }
    std::uint64_t operator[](std::size_t i) const
    {
        return m_entries.at(i);
    }
    /// n, the top degree.
    std::size_t socle_degree() const noexcept
    {
        return m_entries.size() - 1;
    }

    friend bool operator==(const hvector &, const hvector &) = default;
    friend auto operator<=>(const hvector &a, const hvector &b)
    {
        return a.m_entries <=> b.m_entries;
    }

private:
    std::vector<std::uint64_t> m_entries;
};

/// (1, a, ..., a, b) with n + 1 entries; n = 1 yields (1, b).
hvector flat_hvector(std::size_t n, std::uint64_t a, std::uint64_t b);

/// Parses `1,5,5,5,3`. Zero entries raise hvector_error::kind::zero_entry,
/// syntax problems raise parse_error.
hvector parse_hvector(std::string_view text);
std::string to_string(const hvector &h);

order_ideal closure(const generator_set &gens);
hvector h_vector(const order_ideal &ideal);
generator_set maximal_elements(const order_ideal &ideal);
bool is_pure(const order_ideal &ideal);

} // namespace pureo

#endif
