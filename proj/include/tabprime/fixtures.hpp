#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tabprime/errors.hpp"
#include "tabprime/tableau.hpp"

namespace tabprime {

/// One catalog line: a column list in text format plus a tag. For tableau
/// catalogs the columns are the tableau's columns; for tuple catalogs they
/// are the tuple members (whose union is the associated tableau).
struct FixtureEntry {
    std::string text;
    std::string tag;
};

struct FixtureSet {
    std::string name;
    int k = 0;
    int n = 0;
    std::vector<FixtureEntry> entries;

    [[nodiscard]] std::vector<Tableau> tableaux() const {
        std::vector<Tableau> out;
        out.reserve(entries.size());
        for (const FixtureEntry& e : entries) out.push_back(parse_tableau(e.text, k, n));
        return out;
    }

    /// The column lists as written (not canonicalized); for the tuple
    /// catalogs these are the tuple members themselves.
    [[nodiscard]] std::vector<std::vector<Column>> column_lists() const {
        std::vector<std::vector<Column>> out;
        out.reserve(entries.size());
        for (const FixtureEntry& e : entries) {
            parse_tableau(e.text, k, n); // validates the line loudly
            std::vector<Column> cols;
            std::size_t p = 0;
            detail::expect(e.text, p, '[');
            while (true) {
                cols.emplace_back(detail::parse_int_list(e.text, p));
                detail::skip_ws(e.text, p);
                if (p < e.text.size() && e.text[p] == ',') {
                    ++p;
                    continue;
                }
                detail::expect(e.text, p, ']');
                break;
            }
            out.push_back(std::move(cols));
        }
        return out;
    }

    /// Renders the set in the external file format: a shape comment plus
    /// one `<columns> <tag>` line per entry.
    [[nodiscard]] std::string file_content() const {
        std::string out = "# " + name + ": k=" + std::to_string(k) + " n=" + std::to_string(n) + "\n";
        for (const FixtureEntry& e : entries) out += e.text + " " + e.tag + "\n";
        return out;
    }
};

/// Catalog lists shipped with the library. Tags: `real` / `nonreal` carry
/// the published classification (this library does not decide realness);
/// `prime` marks published prime tableaux without a realness tag.
inline const std::vector<FixtureSet>& fixtures() {
    static const std::vector<FixtureSet> sets = {
        {"gr48-nonreal", 4, 8, {
            {"[[1,3,5,7],[2,4,6,8]]", "nonreal"},
            {"[[1,2,4,6],[3,5,7,8]]", "nonreal"},
        }},
        {"gr48-real-seeds", 4, 8, {
            {"[[1,2,3,5],[1,4,6,7]]", "real"},
            {"[[1,2,3,5],[1,4,6,8]]", "real"},
            {"[[1,2,3,5],[1,4,7,8]]", "real"},
            {"[[1,2,3,5],[2,4,6,7]]", "real"},
            {"[[1,2,3,5],[2,4,6,8]]", "real"},
            {"[[1,2,3,5],[2,4,7,8]]", "real"},
            {"[[1,2,3,5],[3,4,6,8]]", "real"},
            {"[[1,2,3,5],[3,4,7,8]]", "real"},
            {"[[1,2,3,5],[4,6,7,8]]", "real"},
            {"[[1,2,3,6],[2,4,7,8]]", "real"},
            {"[[1,2,3,6],[2,5,7,8]]", "real"},
            {"[[1,2,3,6],[3,4,7,8]]", "real"},
            {"[[1,2,3,6],[3,5,7,8]]", "real"},
            {"[[1,2,4,6],[1,3,5,7]]", "real"},
            {"[[1,2,4,6],[2,5,7,8]]", "real"},
        }},
        {"gr510-nonreal-seeds", 5, 10, {
            {"[[1,2,4,6,8],[1,3,5,7,9]]", "nonreal"},
            {"[[1,2,4,6,8],[1,3,5,7,10]]", "nonreal"},
            {"[[1,2,4,6,9],[1,3,5,7,10]]", "nonreal"},
            {"[[1,2,4,6,9],[1,3,5,8,10]]", "nonreal"},
            {"[[1,2,4,7,9],[1,3,5,8,10]]", "nonreal"},
            {"[[1,2,4,7,9],[1,3,6,8,10]]", "nonreal"},
            {"[[1,2,5,7,9],[1,3,6,8,10]]", "nonreal"},
            {"[[1,2,3,5,7],[1,4,6,8,9]]", "nonreal"},
            {"[[1,2,3,5,7],[1,4,6,8,10]]", "nonreal"},
            {"[[1,2,3,5,7],[1,4,6,9,10]]", "nonreal"},
            {"[[1,2,3,5,8],[1,4,6,9,10]]", "nonreal"},
            {"[[1,2,3,5,8],[1,4,7,9,10]]", "nonreal"},
            {"[[1,2,3,6,8],[1,4,7,9,10]]", "nonreal"},
            {"[[1,2,5,7,9],[1,4,6,8,10]]", "nonreal"},
            {"[[1,2,3,6,8],[1,5,7,9,10]]", "nonreal"},
            {"[[1,2,4,6,8],[1,5,7,9,10]]", "nonreal"},
            {"[[1,3,5,7,9],[1,4,6,8,10]]", "nonreal"},
            {"[[1,3,4,6,8],[1,5,7,9,10]]", "nonreal"},
            {"[[1,3,5,7,9],[2,4,6,8,10]]", "nonreal"},
            {"[[1,3,5,7,8],[2,4,6,9,10]]", "nonreal"},
            {"[[1,3,5,6,8],[2,4,7,9,10]]", "nonreal"},
        }},
        {"gr510-real-seeds", 5, 10, {
            {"[[1,2,3,4,6],[1,2,5,7,8]]", "real"},
            {"[[1,2,3,4,6],[1,2,5,7,9]]", "real"},
            {"[[1,2,3,4,6],[1,2,5,7,10]]", "real"},
            {"[[1,2,3,4,6],[1,2,5,8,9]]", "real"},
            {"[[1,2,3,4,6],[1,2,5,8,10]]", "real"},
            {"[[1,2,3,4,6],[1,2,5,9,10]]", "real"},
            {"[[1,2,3,4,6],[1,3,5,7,8]]", "real"},
            {"[[1,2,3,4,6],[1,3,5,7,9]]", "real"},
            {"[[1,2,3,4,6],[1,3,5,7,10]]", "real"},
            {"[[1,2,3,4,6],[1,3,5,8,9]]", "real"},
        }},
        {"gr38-screen-failures", 3, 8, {
            {"[[1,6,7],[2,5,7],[3,4,8]]", "prime"},
            {"[[1,4,6],[2,3,6],[5,7,8]]", "prime"},
            {"[[1,2,5],[3,6,7],[4,5,8]]", "prime"},
            {"[[1,5,6],[2,4,8],[3,4,7]]", "prime"},
            {"[[1,3,6],[2,3,5],[4,7,8]]", "prime"},
            {"[[1,2,4],[2,6,7],[3,5,8]]", "prime"},
            {"[[1,4,7],[1,5,6],[2,3,8]]", "prime"},
            {"[[1,2,5],[3,7,8],[4,6,8]]", "prime"},
        }},
        {"gr39-screen-triples", 3, 9, {
            {"[[1,6,7],[2,5,8],[3,4,9]]", "nonreal"},
            {"[[1,4,6],[2,3,7],[5,8,9]]", "nonreal"},
            {"[[1,2,5],[3,7,8],[4,6,9]]", "nonreal"},
        }},
    };
    return sets;
}

inline std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const FixtureSet& f : fixtures()) out.push_back(f.name);
    return out;
}

inline const FixtureSet& fixture(std::string_view name) {
    for (const FixtureSet& f : fixtures()) {
        if (f.name == name) return f;
    }
    throw DomainError("unknown fixture '" + std::string(name) + "'");
}

/// Reads a fixture file in the external format; shape comes from the
/// registered set of the same name.
inline FixtureSet load_fixture_file(const std::string& name, const std::string& path) {
    const FixtureSet& ref = fixture(name);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open fixture file '" + path + "'");
    FixtureSet out{name, ref.k, ref.n, {}};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        FixtureEntry e;
        is >> e.text >> e.tag;
        if (e.text.empty()) throw ParseError("bad fixture line: " + line);
        parse_tableau(e.text, out.k, out.n); // validates loudly
        out.entries.push_back(std::move(e));
    }
    return out;
}

} // namespace tabprime
