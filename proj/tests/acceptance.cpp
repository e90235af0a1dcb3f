// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <pureo/classify.hpp>
#include <pureo/macaulay.hpp>
#include <pureo/search.hpp>

#include "naive_oracle.hpp"

using namespace pureo;

namespace
{

using clock_type = std::chrono::steady_clock;

struct criterion {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string &title, const criterion &c, double seconds)
{
    std::printf("[%s] %2d %-44s %8.2fs  %s\n", c.pass ? "PASS" : "FAIL", id, title.c_str(), seconds, c.detail.c_str());
    std::fflush(stdout);
    if (!c.pass) {
        ++failures;
    }
}

double since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

const search_options sweep_options{1, false};

struct sweep {
    verify_report report;
    double seconds;
};

sweep run_sweep(std::size_t n, std::uint64_t a_max, std::uint64_t b_max, unsigned jobs = 1)
{
    const auto t0 = clock_type::now();
    auto r = verify_theorem_range(n, a_max, b_max, {}, {jobs, sweep_options.use_pq_bound});
    return {std::move(r), since(t0)};
}

criterion judge_sweep(const sweep &s, double target_seconds)
{
    criterion c;
    std::ostringstream d;
    d << s.report.cells.size() << " cells, " << s.report.disagreements << " disagree, " << s.report.inconclusive
      << " inconclusive";
    for (const auto &cell : s.report.cells) {
        if (!cell.agree) {
            d << "; a=" << cell.a << " b=" << cell.b << " oracle " << to_string(cell.oracle.outcome);
        }
    }
    c.pass = s.report.disagreements == 0 && s.report.inconclusive == 0;
    if (s.seconds > target_seconds) {
        d << "; over " << target_seconds << "s target";
    }
    c.detail = d.str();
    return c;
}

std::string sweep_json(const sweep &s)
{
    return to_json(s.report).dump();
}

std::string catalog_json(const std::vector<catalog_entry> &entries)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto &e : entries) {
        arr.push_back(to_json(e));
    }
    return arr.dump();
}

bool is_flat(const hvector &h)
{
    const auto n = h.socle_degree();
    for (std::size_t i = 2; i < n; ++i) {
        if (h[i] != h[1]) {
            return false;
        }
    }
    return true;
}

} // namespace

int main()
{
    const auto total0 = clock_type::now();

    const auto s1 = run_sweep(4, 6, 8);
    report(1, "n=4 sweep a<=6 b<=8", judge_sweep(s1, 300), s1.seconds);

    const auto s2 = run_sweep(5, 5, 6);
    report(2, "n=5 sweep a<=5 b<=6", judge_sweep(s2, 600), s2.seconds);

    // b runs to C(a+1,2)+2 for each a.
    auto t0 = clock_type::now();
    criterion c3;
    std::size_t cells3 = 0, bad3 = 0, inc3 = 0;
    for (std::uint64_t a = 1; a <= 6; ++a) {
        const auto bmax = binomial(a + 1, 2) + 2;
        for (std::uint64_t b = 1; b <= bmax; ++b) {
            const auto h = flat_hvector(2, a, b);
            const auto got = decide_pure_o_sequence(h, {}, sweep_options);
            const bool expect = (a + 1) / 2 <= b && b <= binomial(a + 1, 2);
            ++cells3;
            if (got.outcome == verdict::inconclusive) {
                ++inc3;
            } else if ((got.outcome == verdict::pure) != expect || (expect && !witness_realizes(got))) {
                ++bad3;
            }
        }
    }
    c3.pass = bad3 == 0 && inc3 == 0;
    c3.detail = std::to_string(cells3) + " cells, " + std::to_string(bad3) + " disagree, " + std::to_string(inc3)
                + " inconclusive";
    report(3, "n=2 sweep a<=6 b<=C(a+1,2)+2", c3, since(t0));

    const auto s4 = run_sweep(3, 6, 8);
    report(4, "n=3 sweep a<=6 b<=8", judge_sweep(s4, 120), s4.seconds);

    t0 = clock_type::now();
    criterion c5;
    std::size_t pure5 = 0;
    for (const auto *s : {&s1, &s2, &s4}) {
        for (const auto &cell : s->report.cells) {
            if (cell.oracle.outcome == verdict::pure) {
                ++pure5;
                if (cell.b > cell.a) {
                    c5.pass = false;
                    c5.detail += "n=" + std::to_string(s->report.n) + " a=" + std::to_string(cell.a)
                                 + " b=" + std::to_string(cell.b) + "; ";
                }
            }
        }
    }
    c5.detail += std::to_string(pure5) + " pure cells, none with b > a";
    if (!c5.pass) {
        c5.detail = "violations: " + c5.detail;
    }
    report(5, "no pure cell with b > a for n >= 3", c5, since(t0));

    t0 = clock_type::now();
    criterion c6;
    std::size_t cases6 = 0, bad6 = 0;
    auto check6 = [&](const generator_set &w, const hvector &target) {
        ++cases6;
        if (h_vector(closure(w)) != target) {
            ++bad6;
        }
    };
    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::uint64_t a = 1; a <= 20; ++a) {
            for (std::uint64_t b = (a + 1) / 2; b <= a; ++b) {
                check6(witness_flat(n, a, b), flat_hvector(n, a, b));
            }
        }
    }
    for (std::uint64_t a = 1; a <= 20; ++a) {
        for (std::uint64_t b = (a + 2) / 3; b <= a; ++b) {
            check6(witness_socle3(a, b), flat_hvector(3, a, b));
        }
        for (std::uint64_t b = (a + 1) / 2; b <= binomial(a + 1, 2); ++b) {
            check6(witness_socle2(a, b), flat_hvector(2, a, b));
        }
    }
    c6.pass = bad6 == 0;
    c6.detail = std::to_string(cases6) + " witnesses, " + std::to_string(bad6) + " wrong";
    report(6, "constructed witnesses realize their targets", c6, since(t0));

    t0 = clock_type::now();
    criterion c7;
    std::mt19937 rng(20260401);
    std::size_t bad7 = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        const unsigned n = 2 + iter % 4;
        const unsigned vars = 1 + rng() % 8;
        std::uniform_int_distribution<unsigned> var(1, vars);
        const auto available = oracle::exponent_vectors(vars, n).size();
        const std::size_t want = 1 + rng() % std::min<std::size_t>(available, 8);
        std::vector<monomial> gens;
        while (gens.size() < want) {
            monomial m;
            for (unsigned i = 0; i < n; ++i) {
                m = m * monomial::variable(var(rng));
            }
            if (std::find(gens.begin(), gens.end(), m) == gens.end()) {
                gens.push_back(m);
            }
        }
        std::shuffle(gens.begin(), gens.end(), rng);
        const generator_set g(gens);
        const auto r = pq_profile(g);
        const auto h = h_vector(closure(g));
        if (r.sum_p != h[1] || r.sum_q != h[2]) {
            ++bad7;
        }
    }
    c7.pass = bad7 == 0;
    c7.detail = "1000 generator sets, " + std::to_string(bad7) + " mismatches";
    report(7, "p and q sums equal h_1 and h_2", c7, since(t0));

    t0 = clock_type::now();
    const auto cat1 = enumerate_pure_hvectors(5, 4, 5, {1, true});
    criterion c8;
    std::size_t equal8 = 0;
    for (const auto &e : cat1) {
        if (e.h[1] != e.h[2]) {
            continue;
        }
        ++equal8;
        if (!is_flat(e.h) || !check_generator_shape(e.witness, 4) || h_vector(closure(e.witness)) != e.h) {
            c8.pass = false;
            c8.detail += to_string(e.h) + "; ";
        }
    }
    c8.detail += std::to_string(cat1.size()) + " entries, " + std::to_string(equal8) + " with h_1 = h_2";
    report(8, "h_1 = h_2 entries are flat with valid shape", c8, since(t0));

    t0 = clock_type::now();
    criterion c9;
    std::size_t sound = 0, complete = 0, bad9 = 0;
    for (const auto &[h, members] : oracle::order_ideal_hvectors(4, 4)) {
        ++sound;
        if (!is_o_sequence(hvector(h))) {
            ++bad9;
            c9.detail += "unsound " + to_string(hvector(h)) + "; ";
        }
    }
    const auto achieved = oracle::order_ideal_hvectors(3, 3);
    std::function<void(std::vector<std::uint64_t> &)> walk = [&](std::vector<std::uint64_t> &e) {
        if (e.size() > 1) {
            const hvector h(e);
            if (!is_o_sequence(h)) {
                return;
            }
            ++complete;
            const auto it = achieved.find(e);
            if (it == achieved.end() || h_vector(closure(generator_set(it->second))) != h) {
                ++bad9;
                c9.detail += "no witness " + to_string(h) + "; ";
            }
        }
        if (e.size() == 4) {
            return;
        }
        const std::uint64_t cap = e.size() == 1 ? 3 : macaulay_growth(e.back(), e.size() - 1);
        for (std::uint64_t v = 1; v <= cap; ++v) {
            e.push_back(v);
            walk(e);
            e.pop_back();
        }
    };
    std::vector<std::uint64_t> root{1};
    walk(root);
    c9.pass = bad9 == 0;
    c9.detail += std::to_string(sound) + " ideal h-vectors sound, " + std::to_string(complete)
                 + " O-sequences witnessed";
    report(9, "Macaulay test sound and complete", c9, since(t0));

    t0 = clock_type::now();
    criterion c10;
    const auto s1_parallel = run_sweep(4, 6, 8, 4);
    const auto cat4 = enumerate_pure_hvectors(5, 4, 5, {4, true});
    const bool same1 = sweep_json(s1) == sweep_json(s1_parallel);
    const bool same8 = catalog_json(cat1) == catalog_json(cat4);
    c10.pass = same1 && same8;
    c10.detail = std::string("run 1 ") + (same1 ? "identical" : "differs") + ", run 8 "
                 + (same8 ? "identical" : "differs") + " (jobs 1 vs 4)";
    report(10, "byte-identical JSON across worker counts", c10, since(t0));

    std::printf("total %.2fs, %d failing\n", since(total0), failures);
    return failures ? 1 : 0;
}
