#ifndef PUREO_DECISION_HPP
#define PUREO_DECISION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include <pureo/order_ideal.hpp>

namespace pureo
{

/// The sequence (1, a, ..., a, b) with n + 1 entries.
struct flat_query {
    std::size_t n;
    std::uint64_t a;
    std::uint64_t b;

    friend bool operator==(const flat_query &, const flat_query &) = default;
};

enum class verdict { pure, not_pure, inconclusive };

enum class reason {
    below_lower_bound,
    above_upper_bound,
    exceeds_twice_socle,
    macaulay_violation,
    search_exhausted,
};

std::string_view to_string(verdict v) noexcept;
std::string_view to_string(reason r) noexcept;

// Rule tags carried in serialized decisions.
namespace rules
{
inline constexpr std::string_view theorem_flat = "theorem-flat";
inline constexpr std::string_view prop_socle2 = "prop-2.1-i";
inline constexpr std::string_view prop_socle3 = "prop-2.1-ii";
inline constexpr std::string_view socle_bound = "lemma-1.1";
inline constexpr std::string_view twice_socle = "lemma-1.3";
inline constexpr std::string_view n1_convention = "n1-convention";
inline constexpr std::string_view macaulay = "macaulay";
inline constexpr std::string_view variable_coverage = "variable-coverage";
inline constexpr std::string_view exhaustive_search = "exhaustive-search";
} // namespace rules

/// Outcome of a membership query.
///
/// A pure verdict always carries a witness whose closure realizes the
/// queried sequence. Inconclusive outcomes name the budget that ran out.
struct decision {
    std::variant<flat_query, hvector> query;
    verdict outcome = verdict::not_pure;
    std::string rule;
    std::optional<reason> why;
    std::optional<generator_set> witness;
    std::optional<std::string> exhausted_budget;

    hvector sequence() const;
};

/// {query, verdict, rule, reason?, budget?, witness?} in that key order.
/// The witness is omitted when include_witness is false.
nlohmann::ordered_json to_json(const decision &d, bool include_witness = true);

/// True iff the witness is present and h_vector(closure(witness)) equals
/// the queried sequence.
bool witness_realizes(const decision &d);

} // namespace pureo

#endif
