#ifndef PUREO_SEARCH_HPP
#define PUREO_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <pureo/decision.hpp>
#include <pureo/order_ideal.hpp>

namespace pureo
{

/// Budgets for the exhaustive oracle. Running out of any of them produces an
/// Inconclusive decision naming the budget; it never produces NotPure.
struct search_limits {
    unsigned max_variables = 7;
    unsigned max_generators = 64;
    std::uint64_t node_budget = 10'000'000;
    std::chrono::milliseconds time_budget{60'000};
};

struct search_options {
    unsigned jobs = 1;
    /// Reject h with h_1 = h_2 > 2 h_n (n >= 4) before searching. Disable to
    /// make the search alone responsible for those cells.
    bool use_pq_bound = true;
};

// Requested enumeration is beyond the desk-scale tables.
class guardrail_error : public std::length_error
{
public:
    using std::length_error::length_error;
};

/// Orbit representative under relabeling of variables.
///
/// Exponent vectors (over the used variables, renumbered 1..s) are ordered
/// with larger leading exponents first; a set's code is its sorted list of
/// vectors and the representative minimizes the code lexicographically. The
/// result lists generators in code order. Throws guardrail_error beyond 10
/// used variables.
generator_set canonical_form(const generator_set &gens);

/// Exhaustive isomorph-free search for a pure order ideal with h-vector h.
/// A pure verdict carries a witness of h_n degree-n monomials on x1..x_{h_1},
/// in canonical form.
decision decide_pure_o_sequence(const hvector &h, const search_limits &limits = {}, const search_options &options = {});

struct catalog_entry {
    hvector h;
    generator_set witness;
    std::uint64_t variables_used;
    std::uint64_t generator_count;
    /// Preorder rank of the witness in the serial canonical expansion.
    std::uint64_t nodes;

    friend bool operator==(const catalog_entry &, const catalog_entry &) = default;
};

/// Every h-vector of a pure order ideal generated in degree n by at most g
/// monomials on at most s variables, one canonical witness each, sorted by h.
/// Throws guardrail_error when the instance is too large for the tables.
std::vector<catalog_entry> enumerate_pure_hvectors(unsigned s, unsigned n, unsigned g, const search_options &options = {});

struct verify_cell {
    std::uint64_t a;
    std::uint64_t b;
    decision expected;
    decision oracle;
    bool agree;
};

struct verify_report {
    std::size_t n;
    std::uint64_t a_max;
    std::uint64_t b_max;
    std::vector<verify_cell> cells;
    std::size_t agreements = 0;
    std::size_t disagreements = 0;
    std::size_t inconclusive = 0;
};

/// Runs the oracle on (1, a, ..., a, b) for 1 <= a <= a_max, 1 <= b <= b_max
/// and compares each verdict with decide_flat. Requires n >= 2.
verify_report verify_theorem_range(std::size_t n, std::uint64_t a_max, std::uint64_t b_max,
                                   const search_limits &limits = {}, const search_options &options = {});

nlohmann::ordered_json to_json(const catalog_entry &e);
catalog_entry catalog_entry_from_json(const nlohmann::json &j);
nlohmann::ordered_json to_json(const verify_report &r);

/// Appends one JSON object per line.
void append_catalog(const std::string &path, const std::vector<catalog_entry> &entries);
/// Reads a catalog file, sorts by h, and keeps the first line seen for each h.
std::vector<catalog_entry> load_catalog(const std::string &path);

} // namespace pureo

#endif
