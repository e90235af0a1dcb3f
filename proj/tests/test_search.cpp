#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <set>

#include <pureo/classify.hpp>
#include <pureo/search.hpp>

#include "naive_oracle.hpp"

using namespace pureo;

namespace
{

generator_set gens(std::initializer_list<const char *> texts)
{
    std::vector<monomial> out;
    for (auto t : texts) {
        out.push_back(parse_monomial(t));
    }
    return generator_set(std::move(out));
}

std::vector<std::uint64_t> entries(const hvector &h)
{
    return {h.entries().begin(), h.entries().end()};
}

search_options no_pq(unsigned jobs = 1)
{
    return {jobs, false};
}

generator_set relabel(const generator_set &g, const std::vector<var_index> &perm)
{
    std::vector<monomial> out;
    for (const auto &m : g) {
        std::vector<term> t;
        for (const auto &x : m.terms()) {
            t.push_back({perm[x.var - 1], x.exp});
        }
        out.emplace_back(std::move(t));
    }
    return generator_set(std::move(out));
}

// Every sequence (1, h_1, ..., h_n) with h_1 <= max_h1 and h_i no larger than
// the number of degree-i monomials on h_1 variables.
std::vector<std::vector<std::uint64_t>> small_sequences(std::size_t n, std::uint64_t max_h1)
{
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t h1 = 1; h1 <= max_h1; ++h1) {
        std::vector<std::uint64_t> cap{1, h1};
        for (std::size_t i = 2; i <= n; ++i) {
            cap.push_back(oracle::exponent_vectors(static_cast<unsigned>(h1), static_cast<unsigned>(i)).size());
        }
        std::vector<std::uint64_t> cur{1, h1};
        auto rec = [&](auto &&self) -> void {
            if (cur.size() == n + 1) {
                out.push_back(cur);
                return;
            }
            for (std::uint64_t v = 1; v <= cap[cur.size()]; ++v) {
                cur.push_back(v);
                self(self);
                cur.pop_back();
            }
        };
        rec(rec);
    }
    return out;
}

} // namespace

TEST_CASE("canonical_form examples")
{
    CHECK(canonical_form(gens({"x2*x3^3", "x1^4"})) == canonical_form(gens({"x1*x2^3", "x3^4"})));
    CHECK(canonical_form(gens({"x1*x2^3", "x3^4"})) == gens({"x1^4", "x2^3*x3"}));
    CHECK(canonical_form(gens({"x7^3"})) == gens({"x1^3"}));
    CHECK(canonical_form(gens({"x9*x4", "x4^2"})) == gens({"x1^2", "x1*x2"}));
    CHECK(canonical_form(gens({"1"})) == gens({"1"}));
}

TEST_CASE("canonical_form is idempotent and constant on orbits")
{
    std::mt19937 rng(41);
    std::uniform_int_distribution<unsigned> var(1, 5);
    for (int iter = 0; iter < 300; ++iter) {
        const unsigned n = 1 + iter % 4;
        std::vector<monomial> out;
        const std::size_t want = 1 + iter % 5;
        for (int tries = 0; out.size() < want && tries < 50; ++tries) {
            monomial m;
            for (unsigned i = 0; i < n; ++i) {
                m = m * monomial::variable(var(rng));
            }
            if (std::find(out.begin(), out.end(), m) == out.end()) {
                out.push_back(m);
            }
        }
        const generator_set g(out);
        const auto c = canonical_form(g);
        CHECK(canonical_form(c) == c);
        std::vector<var_index> perm{3, 9, 1, 12, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(relabel(g, perm)) == c);
        CHECK(h_vector(closure(c)) == h_vector(closure(g)));
    }
}

TEST_CASE("decide_pure_o_sequence examples")
{
    const auto flat_low = decide_pure_o_sequence(hvector({1, 3, 3, 3, 1}));
    CHECK(flat_low.outcome == verdict::not_pure);
    CHECK(decide_pure_o_sequence(hvector({1, 3, 3, 3, 1}), {}, no_pq()).outcome == verdict::not_pure);

    const auto socle3 = decide_pure_o_sequence(hvector({1, 4, 4, 3}));
    CHECK(socle3.outcome == verdict::pure);
    CHECK(witness_realizes(socle3));

    const auto quad = decide_pure_o_sequence(hvector({1, 2, 3}));
    CHECK(quad.outcome == verdict::pure);
    CHECK(to_strings(*quad.witness) == std::vector<std::string>{"x1^2", "x1*x2", "x2^2"});

    const auto mac = decide_pure_o_sequence(hvector({1, 1, 2}));
    CHECK(mac.outcome == verdict::not_pure);
    CHECK(mac.why == reason::macaulay_violation);
    CHECK(mac.rule == "macaulay");
}

TEST_CASE("decide_pure_o_sequence edge cases")
{
    const auto unit = decide_pure_o_sequence(hvector({1}));
    CHECK(unit.outcome == verdict::pure);
    CHECK(witness_realizes(unit));

    const auto line = decide_pure_o_sequence(hvector({1, 3}));
    CHECK(line.outcome == verdict::pure);
    CHECK(to_strings(*line.witness) == std::vector<std::string>{"x1", "x2", "x3"});

    const auto cover = decide_pure_o_sequence(hvector({1, 7, 3}));
    CHECK(cover.why == reason::below_lower_bound);
    CHECK(cover.rule == "variable-coverage");

    const auto pq = decide_pure_o_sequence(hvector({1, 5, 5, 5, 2}));
    CHECK(pq.why == reason::exceeds_twice_socle);
    CHECK(pq.rule == "lemma-1.3");
    const auto searched = decide_pure_o_sequence(hvector({1, 5, 5, 5, 2}), {}, no_pq());
    CHECK(searched.why == reason::search_exhausted);
    CHECK(searched.rule == "exhaustive-search");

    // (1,3,3,4) passes Macaulay; only the search rules it out.
    const auto ex = decide_pure_o_sequence(hvector({1, 3, 3, 4}));
    CHECK(ex.outcome == verdict::not_pure);
    CHECK(ex.why == reason::search_exhausted);
}

TEST_CASE("budgets produce Inconclusive, never NotPure")
{
    search_limits tiny;
    tiny.node_budget = 3;
    const auto d = decide_pure_o_sequence(hvector({1, 6, 6, 6, 7}), tiny, no_pq());
    CHECK(d.outcome == verdict::inconclusive);
    CHECK(d.exhausted_budget == std::string("nodes"));

    search_limits narrow;
    narrow.max_variables = 3;
    const auto v = decide_pure_o_sequence(hvector({1, 4, 4, 3}), narrow);
    CHECK(v.outcome == verdict::inconclusive);
    CHECK(v.exhausted_budget == std::string("max_variables"));
    CHECK(to_json(v).dump()
          == R"({"query":{"h":[1,4,4,3]},"verdict":"Inconclusive","rule":"exhaustive-search","budget":"max_variables"})");

    search_limits few;
    few.max_generators = 2;
    CHECK(decide_pure_o_sequence(hvector({1, 4, 4, 3}), few).exhausted_budget == std::string("max_generators"));

    search_limits quick;
    quick.time_budget = std::chrono::milliseconds(0);
    CHECK(decide_pure_o_sequence(hvector({1, 6, 6, 6, 7}), quick, no_pq()).outcome == verdict::inconclusive);
}

TEST_CASE("search agrees with naive subset enumeration for h_1 <= 4, n <= 3")
{
    std::size_t checked = 0;
    std::size_t pure = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto &h : small_sequences(n, n == 3 ? 4 : 5)) {
            const auto d = decide_pure_o_sequence(hvector(h), {}, no_pq());
            const auto naive = oracle::find_pure_witness(h);
            REQUIRE(d.outcome != verdict::inconclusive);
            CHECK_MESSAGE((d.outcome == verdict::pure) == naive.has_value(), to_string(hvector(h)));
            if (d.outcome == verdict::pure) {
                CHECK(witness_realizes(d));
                CHECK(canonical_form(*d.witness) == *d.witness);
                ++pure;
            }
            ++checked;
        }
    }
    CHECK(checked > 300);
    CHECK(pure > 50);
}

TEST_CASE("pre-filters agree with naive enumeration in degree 4")
{
    for (const auto &h : small_sequences(4, 3)) {
        const auto filtered = decide_pure_o_sequence(hvector(h));
        const bool naive = oracle::find_pure_witness(h).has_value();
        CHECK_MESSAGE((filtered.outcome == verdict::pure) == naive, to_string(hvector(h)));
    }
    for (std::uint64_t a = 1; a <= 6; ++a) {
        for (std::uint64_t b = 1; b <= 4; ++b) {
            const auto h = flat_hvector(4, a, b);
            CHECK(decide_pure_o_sequence(h).outcome == decide_pure_o_sequence(h, {}, no_pq()).outcome);
        }
    }
}

TEST_CASE("enumerate_pure_hvectors examples")
{
    const auto two = enumerate_pure_hvectors(2, 2, 3);
    std::vector<std::vector<std::uint64_t>> hs;
    for (const auto &e : two) {
        hs.push_back(entries(e.h));
    }
    CHECK(hs == std::vector<std::vector<std::uint64_t>>{{1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {1, 2, 3}});

    const auto chain = enumerate_pure_hvectors(1, 3, 1);
    REQUIRE(chain.size() == 1);
    CHECK(chain[0].h == hvector({1, 1, 1, 1}));
    CHECK(to_strings(chain[0].witness) == std::vector<std::string>{"x1^3"});
    CHECK(chain[0].nodes == 1);

    const auto five = enumerate_pure_hvectors(5, 4, 3);
    CHECK(std::any_of(five.begin(), five.end(), [](const auto &e) { return e.h == hvector({1, 5, 5, 5, 3}); }));

    CHECK_THROWS_AS(enumerate_pure_hvectors(9, 2, 2), guardrail_error);
    CHECK_THROWS_AS(enumerate_pure_hvectors(8, 12, 2), guardrail_error);
}

TEST_CASE("enumeration matches naive subset enumeration")
{
    const std::vector<std::array<unsigned, 3>> cases{{3, 2, 6}, {3, 3, 4}, {4, 2, 5}, {4, 3, 4}, {4, 4, 3}, {3, 5, 3}};
    for (const auto &[s, n, g] : cases) {
        std::set<std::vector<std::uint64_t>> got;
        for (const auto &e : enumerate_pure_hvectors(s, n, g)) {
            got.insert(entries(e.h));
            CHECK(h_vector(closure(e.witness)) == e.h);
            CHECK(canonical_form(e.witness) == e.witness);
            CHECK(e.variables_used == e.h[1]);
            CHECK(e.generator_count == e.h[n]);
            CHECK(e.witness.size() == e.generator_count);
        }
        CHECK(got == oracle::pure_hvectors_by_subsets(s, n, g));
    }
}

TEST_CASE("catalog entries grow through the first half")
{
    for (unsigned n = 2; n <= 6; ++n) {
        for (const auto &e : enumerate_pure_hvectors(4, n, 3)) {
            for (std::size_t i = 0; i + 1 <= (n + 1) / 2; ++i) {
                CHECK_MESSAGE(e.h[i] <= e.h[i + 1], to_string(e.h));
            }
        }
    }
}

TEST_CASE("results do not depend on the worker count")
{
    const auto serial = enumerate_pure_hvectors(4, 3, 4, {1, true});
    const auto parallel = enumerate_pure_hvectors(4, 3, 4, {4, true});
    CHECK(serial == parallel);

    for (const auto &h : {hvector({1, 5, 5, 5, 4}), hvector({1, 6, 6, 6, 7}), hvector({1, 6, 14}), hvector({1, 4, 7, 9})}) {
        const auto a = decide_pure_o_sequence(h, {}, no_pq(1));
        const auto b = decide_pure_o_sequence(h, {}, no_pq(4));
        CHECK(to_json(a).dump() == to_json(b).dump());
    }
}

TEST_CASE("verify_theorem_range on small grids")
{
    const auto r4 = verify_theorem_range(4, 4, 6, {}, no_pq());
    CHECK(r4.cells.size() == 24);
    CHECK(r4.disagreements == 0);
    CHECK(r4.inconclusive == 0);

    const auto r3 = verify_theorem_range(3, 5, 6, {}, no_pq());
    CHECK(r3.disagreements == 0);
    CHECK(r3.inconclusive == 0);

    const auto r2 = verify_theorem_range(2, 4, 10, {}, no_pq());
    CHECK(r2.disagreements == 0);
    CHECK(r2.inconclusive == 0);

    CHECK_THROWS_AS(verify_theorem_range(1, 2, 2), std::invalid_argument);
}

TEST_CASE("catalog file is append-only and sorted on load")
{
    const auto path = (std::filesystem::temp_directory_path() / "pureo_catalog_test.jsonl").string();
    std::filesystem::remove(path);
    const auto entries3 = enumerate_pure_hvectors(3, 3, 2);
    const auto entries2 = enumerate_pure_hvectors(2, 3, 2);
    append_catalog(path, entries3);
    append_catalog(path, entries2);
    const auto loaded = load_catalog(path);
    CHECK(std::is_sorted(loaded.begin(), loaded.end(), [](const auto &a, const auto &b) { return a.h < b.h; }));
    // Every h from the 2-variable run also appears in the 3-variable run, which was written first.
    CHECK(loaded == entries3);
    CHECK(to_json(loaded.front()).dump() == to_json(entries3.front()).dump());
    std::filesystem::remove(path);
}
