#ifndef PUREO_TESTS_NAIVE_ORACLE_HPP
#define PUREO_TESTS_NAIVE_ORACLE_HPP

// Brute-force references used only by tests. Nothing here touches the
// search engine, the canonical form, or the Macaulay code.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <pureo/order_ideal.hpp>

namespace pureo::oracle
{

using sequence = std::vector<std::uint64_t>;

/// All degree-d exponent vectors on s variables, in no particular order.
std::vector<std::vector<unsigned>> exponent_vectors(unsigned s, unsigned d);

monomial to_monomial(const std::vector<unsigned> &e);

/// h-vectors of every set of 1..g distinct degree-n monomials on s
/// variables, by plain subset enumeration (no symmetry reduction).
std::set<sequence> pure_hvectors_by_subsets(unsigned s, unsigned n, unsigned g);

/// First size-h_n subset of degree-n monomials on h_1 variables whose
/// generated ideal has h-vector h, if any.
std::optional<generator_set> find_pure_witness(const sequence &h);

/// Every order ideal on at most k variables with no members above degree D,
/// keyed by positive h-vector (trailing zeros dropped), with one member list
/// per h-vector.
std::map<sequence, std::vector<monomial>> order_ideal_hvectors(unsigned k, unsigned D);

/// Largest number of degree-(i+1) monomials all of whose degree-i divisors
/// lie in a set of `count` degree-i monomials on `vars` variables.
std::uint64_t max_next_stratum(unsigned count, unsigned i, unsigned vars);

} // namespace pureo::oracle

#endif
