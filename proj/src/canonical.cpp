#include <algorithm>
#include <numeric>
#include <vector>

#include <pureo/search.hpp>

namespace pureo
{

namespace
{

using row = std::vector<exponent_type>;

// Larger leading exponent first.
bool row_less(const row &a, const row &b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), std::greater<>{});
}

bool code_less(const std::vector<row> &a, const std::vector<row> &b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), row_less);
}

} // namespace

generator_set canonical_form(const generator_set &gens)
{
    std::vector<var_index> vars;
    for (const auto &g : gens) {
        for (const auto &t : g.terms()) {
            vars.push_back(t.var);
        }
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    const std::size_t u = vars.size();
    if (u > 10) {
        throw guardrail_error("canonical_form supports at most 10 distinct variables");
    }

    std::vector<row> rows;
    for (const auto &g : gens) {
        row r(u, 0);
        for (const auto &t : g.terms()) {
            r[static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), t.var) - vars.begin())] = t.exp;
        }
        rows.push_back(std::move(r));
    }

    std::vector<std::size_t> perm(u);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<row> best;
    std::vector<row> image(rows.size(), row(u));
    do {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t v = 0; v < u; ++v) {
                image[i][perm[v]] = rows[i][v];
            }
        }
        std::sort(image.begin(), image.end(), row_less);
        if (best.empty() || code_less(image, best)) {
            best = image;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<monomial> out;
    for (const auto &r : best) {
        std::vector<term> terms;
        for (std::size_t v = 0; v < u; ++v) {
            if (r[v] != 0) {
                terms.push_back({static_cast<var_index>(v + 1), r[v]});
            }
        }
        out.emplace_back(std::move(terms));
    }
    return generator_set(std::move(out));
}

} // namespace pureo
