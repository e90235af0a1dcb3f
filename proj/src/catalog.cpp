#include <algorithm>
#include <fstream>

#include <pureo/search.hpp>

namespace pureo
{

nlohmann::ordered_json to_json(const catalog_entry &e)
{
    nlohmann::ordered_json j;
    j["h"] = std::vector<std::uint64_t>(e.h.entries().begin(), e.h.entries().end());
    j["witness"] = to_strings(e.witness);
    j["vars"] = e.variables_used;
    j["gens"] = e.generator_count;
    j["nodes"] = e.nodes;
    return j;
}

catalog_entry catalog_entry_from_json(const nlohmann::json &j)
{
    std::vector<monomial> gens;
    for (const auto &s : j.at("witness")) {
        gens.push_back(parse_monomial(s.get<std::string>()));
    }
    return {hvector(j.at("h").get<std::vector<std::uint64_t>>()), generator_set(std::move(gens)),
            j.at("vars").get<std::uint64_t>(), j.at("gens").get<std::uint64_t>(), j.at("nodes").get<std::uint64_t>()};
}

void append_catalog(const std::string &path, const std::vector<catalog_entry> &entries)
{
    std::ofstream out(path, std::ios::app);
    if (!out) {
        throw std::runtime_error("cannot open catalog " + path + " for appending");
    }
    for (const auto &e : entries) {
        out << to_json(e).dump() << '\n';
    }
    if (!out) {
        throw std::runtime_error("write to catalog " + path + " failed");
    }
}

std::vector<catalog_entry> load_catalog(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open catalog " + path);
    }
    std::vector<catalog_entry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        try {
            entries.push_back(catalog_entry_from_json(nlohmann::json::parse(line)));
        } catch (const std::exception &ex) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + ex.what());
        }
    }
    std::stable_sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) { return a.h < b.h; });
    entries.erase(std::unique(entries.begin(), entries.end(), [](const auto &a, const auto &b) { return a.h == b.h; }),
                  entries.end());
    return entries;
}

} // namespace pureo
