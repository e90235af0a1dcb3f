#include <pureo/cli.hpp>

#include <cstdlib>
#include <fstream>
#include <unordered_set>

#include <CLI11.hpp>
#include <json.hpp>

#include <pureo/classify.hpp>
#include <pureo/decision.hpp>
#include <pureo/macaulay.hpp>
#include <pureo/search.hpp>

namespace pureo::cli
{

generator_set read_generators(std::istream &in)
{
    std::vector<monomial> gens;
    std::unordered_set<monomial> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') {
            continue;
        }
        monomial m;
        try {
            m = parse_monomial(line);
        } catch (const parse_error &e) {
            throw generator_file_error(e.what(), line_no);
        }
        if (!seen.insert(m).second) {
            throw generator_file_error("duplicate monomial " + to_string(m), line_no);
        }
        gens.push_back(std::move(m));
    }
    if (gens.empty()) {
        throw generator_file_error("no generators", 0);
    }
    return generator_set(std::move(gens));
}

generator_set load_generators(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw generator_file_error("cannot open " + path, 0);
    }
    return read_generators(in);
}

namespace
{

using ojson = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

hvector sequence_arg(const std::string &token)
{
    try {
        return parse_hvector(token);
    } catch (const std::invalid_argument &e) {
        throw usage_error("invalid sequence '" + token + "': " + e.what());
    }
}

std::vector<std::uint64_t> entries_of(const hvector &h)
{
    return {h.entries().begin(), h.entries().end()};
}

std::string join(const std::vector<std::string> &parts, const char *sep)
{
    std::string out;
    for (const auto &p : parts) {
        if (!out.empty()) {
            out += sep;
        }
        out += p;
    }
    return out;
}

int exit_for(verdict v)
{
    switch (v) {
        case verdict::pure:
            return exit_ok;
        case verdict::not_pure:
            return exit_negative;
        case verdict::inconclusive:
            return exit_inconclusive;
    }
    return exit_usage;
}

void print_decision_text(std::ostream &out, const decision &d, bool with_witness)
{
    out << to_string(d.sequence()) << ": " << to_string(d.outcome) << " [" << d.rule << "]";
    if (d.why) {
        out << " " << to_string(*d.why);
    }
    if (d.exhausted_budget) {
        out << " (budget: " << *d.exhausted_budget << ")";
    }
    out << '\n';
    if (with_witness && d.witness) {
        out << "witness: " << join(to_strings(*d.witness), ", ") << '\n';
    }
}

unsigned default_jobs()
{
    if (const char *env = std::getenv("PURE_O_JOBS")) {
        try {
            const auto v = std::stoul(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception &) {
        }
    }
    return 1;
}

struct limit_flags {
    std::uint64_t nodes = search_limits{}.node_budget;
    double seconds = 60.0;
    unsigned max_vars = search_limits{}.max_variables;
    unsigned max_gens = search_limits{}.max_generators;
    unsigned jobs = 1;
    bool no_pq = false;

    void attach(CLI::App *cmd)
    {
        cmd->add_option("--nodes", nodes, "Node budget")->check(CLI::PositiveNumber);
        cmd->add_option("--seconds", seconds, "Time budget in seconds")->check(CLI::PositiveNumber);
        cmd->add_option("--max-vars", max_vars, "Largest h_1 the search will attempt")->check(CLI::PositiveNumber);
        cmd->add_option("--max-gens", max_gens, "Largest h_n the search will attempt")->check(CLI::PositiveNumber);
        cmd->add_flag("--no-pq-bound", no_pq, "Let the search decide cells the h_1 = h_2 bound would reject");
    }
    search_limits limits() const
    {
        return {max_vars, max_gens, nodes, std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000))};
    }
    search_options options() const
    {
        return {jobs, !no_pq};
    }
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Pure O-sequence checks, witnesses and exhaustive verification", "pure-o"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    limit_flags lf;
    lf.jobs = default_jobs();
    app.add_option("--jobs", lf.jobs, "Worker threads (default: $PURE_O_JOBS or 1)")->check(CLI::PositiveNumber);

    std::string seq;
    auto *check_o = app.add_subcommand("check-o", "Macaulay test: is h an O-sequence?");
    check_o->add_option("sequence", seq, "Comma-separated sequence")->required();

    bool with_witness = false;
    auto *check_pure = app.add_subcommand("check-pure", "Exhaustive test: is h a pure O-sequence?");
    check_pure->add_option("sequence", seq, "Comma-separated sequence")->required();
    check_pure->add_flag("--witness", with_witness, "Print the witness generators");
    lf.attach(check_pure);

    std::uint64_t n = 0, a = 0, b = 0;
    auto *classify_flat = app.add_subcommand("classify-flat", "Closed-form decision for (1,a,...,a,b)");
    classify_flat->add_option("n", n)->required()->check(CLI::PositiveNumber);
    classify_flat->add_option("a", a)->required()->check(CLI::PositiveNumber);
    classify_flat->add_option("b", b)->required()->check(CLI::PositiveNumber);

    std::string kind;
    std::vector<std::uint64_t> params;
    std::string out_path;
    auto *witness = app.add_subcommand("witness", "Construct a witness: flat N A B | socle2 A B | socle3 A B");
    witness->add_option("kind", kind)->required()->check(CLI::IsMember({"flat", "socle2", "socle3"}));
    witness->add_option("params", params)->required()->check(CLI::PositiveNumber);
    witness->add_option("--out", out_path, "Also write the generators to this file");

    std::string gens_path;
    auto *hvec = app.add_subcommand("hvector", "h-vector of the order ideal generated by a file");
    hvec->add_option("--gens", gens_path)->required();
    auto *pq = app.add_subcommand("pq", "New-variable and new-quadric counts per generator");
    pq->add_option("--gens", gens_path)->required();

    unsigned s = 0, deg = 0, g = 0;
    std::string catalog_path;
    auto *enumerate = app.add_subcommand("enumerate", "All pure h-vectors from <= G degree-N generators on <= S variables");
    enumerate->add_option("s", s)->required()->check(CLI::PositiveNumber);
    enumerate->add_option("n", deg)->required()->check(CLI::PositiveNumber);
    enumerate->add_option("g", g)->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--catalog", catalog_path, "Append entries to this line-JSON catalog");

    std::uint64_t a_max = 0, b_max = 0;
    auto *verify = app.add_subcommand("verify", "Compare the oracle with the closed form on a grid");
    verify->add_option("n", n)->required()->check(CLI::Range(2, 255));
    verify->add_option("a_max", a_max)->required()->check(CLI::PositiveNumber);
    verify->add_option("b_max", b_max)->required()->check(CLI::PositiveNumber);
    lf.attach(verify);

    std::vector<const char *> argv{"pure-o"};
    for (const auto &a_ : args) {
        argv.push_back(a_.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    const bool text = format == "text";

    try {
        if (*check_o) {
            const auto h = sequence_arg(seq);
            const auto violation = first_macaulay_violation(h);
            if (text) {
                out << to_string(h) << (violation ? " is not" : " is") << " an O-sequence";
                if (violation) {
                    out << " (h_" << *violation + 1 << " exceeds the Macaulay bound of h_" << *violation << ")";
                }
                out << '\n';
            } else {
                ojson j;
                j["h"] = entries_of(h);
                j["o_sequence"] = !violation;
                if (violation) {
                    j["violation_degree"] = *violation;
                }
                out << j.dump() << '\n';
            }
            return violation ? exit_negative : exit_ok;
        }
        if (*check_pure) {
            const auto h = sequence_arg(seq);
            const auto d = decide_pure_o_sequence(h, lf.limits(), lf.options());
            if (text) {
                print_decision_text(out, d, with_witness);
            } else {
                out << to_json(d, with_witness).dump() << '\n';
            }
            return exit_for(d.outcome);
        }
        if (*classify_flat) {
            const auto d = decide_flat({n, a, b});
            if (text) {
                print_decision_text(out, d, true);
            } else {
                out << to_json(d).dump() << '\n';
            }
            return exit_for(d.outcome);
        }
        if (*witness) {
            const std::size_t arity = kind == "flat" ? 3 : 2;
            if (params.size() != arity) {
                throw usage_error("witness " + kind + " takes " + std::to_string(arity) + " numbers, got "
                                  + std::to_string(params.size()));
            }
            std::optional<generator_set> w;
            try {
                if (kind == "flat") {
                    w = witness_flat(params[0], params[1], params[2]);
                } else if (kind == "socle2") {
                    w = witness_socle2(params[0], params[1]);
                } else {
                    w = witness_socle3(params[0], params[1]);
                }
            } catch (const range_error &e) {
                throw usage_error(std::string(to_string(e.why())) + ": " + e.what());
            } catch (const std::invalid_argument &e) {
                throw usage_error(e.what());
            }
            const auto h = h_vector(closure(*w));
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                for (const auto &m : to_strings(*w)) {
                    f << m << '\n';
                }
                if (!f) {
                    throw std::runtime_error("cannot write " + out_path);
                }
            }
            if (text) {
                out << kind << " " << to_string(h) << ": " << join(to_strings(*w), ", ") << '\n';
            } else {
                ojson j;
                j["kind"] = kind;
                j["h"] = entries_of(h);
                j["witness"] = to_strings(*w);
                out << j.dump() << '\n';
            }
            return exit_ok;
        }
        if (*hvec) {
            const auto h = h_vector(closure(load_generators(gens_path)));
            if (text) {
                out << to_string(h) << '\n';
            } else {
                ojson j;
                j["h"] = entries_of(h);
                out << j.dump() << '\n';
            }
            return exit_ok;
        }
        if (*pq) {
            const auto r = pq_profile(load_generators(gens_path));
            if (text) {
                out << "p:";
                for (auto v : r.p) {
                    out << ' ' << v;
                }
                out << " (sum " << r.sum_p << ")\nq:";
                for (auto v : r.q) {
                    out << ' ' << v;
                }
                out << " (sum " << r.sum_q << ")\n";
            } else {
                ojson j;
                j["p"] = r.p;
                j["q"] = r.q;
                j["sum_p"] = r.sum_p;
                j["sum_q"] = r.sum_q;
                out << j.dump() << '\n';
            }
            return exit_ok;
        }
        if (*enumerate) {
            const auto entries = enumerate_pure_hvectors(s, deg, g, {lf.jobs, true});
            if (!catalog_path.empty()) {
                append_catalog(catalog_path, entries);
            }
            if (text) {
                for (const auto &e : entries) {
                    out << to_string(e.h) << ": " << join(to_strings(e.witness), ", ") << '\n';
                }
            } else {
                ojson j;
                j["s"] = s;
                j["n"] = deg;
                j["g"] = g;
                j["count"] = entries.size();
                auto arr = ojson::array();
                for (const auto &e : entries) {
                    arr.push_back(to_json(e));
                }
                j["entries"] = std::move(arr);
                out << j.dump() << '\n';
            }
            return exit_ok;
        }
        if (*verify) {
            const auto r = verify_theorem_range(n, a_max, b_max, lf.limits(), lf.options());
            if (text) {
                for (const auto &c : r.cells) {
                    out << "a=" << c.a << " b=" << c.b << ": expected " << to_string(c.expected.outcome) << ", oracle "
                        << to_string(c.oracle.outcome) << (c.agree ? "" : "  <-- MISMATCH") << '\n';
                }
                out << r.agreements << " agree, " << r.disagreements << " disagree, " << r.inconclusive
                    << " inconclusive\n";
            } else {
                out << to_json(r).dump() << '\n';
            }
            if (r.disagreements) {
                return exit_negative;
            }
            return r.inconclusive ? exit_inconclusive : exit_ok;
        }
    } catch (const usage_error &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const generator_file_error &e) {
        err << "error: " << gens_path << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const guardrail_error &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace pureo::cli
