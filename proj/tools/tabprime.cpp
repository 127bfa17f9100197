// Command-line front end: tableau/monomial conversions, separation checks,
// noncrossing factorization, 2-column primality and catalogs, promotion,
// and dual-canonical-basis expansions. Text output on stdout, diagnostics
// on stderr. Exit codes: 0 success, 2 parse error, 3 guard violation,
// 4 domain error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "tabprime/json_io.hpp"
#include "tabprime/tabprime.hpp"

namespace {

using namespace tabprime;

int thread_count() {
    if (const char* env = std::getenv("TABPRIME_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

struct Options {
    int k = 0;
    int n = 0;
    bool json = false;
};

void print_tableau_lines(const std::vector<Tableau>& ts, bool json_mode) {
    if (json_mode) {
        json out = json::array();
        for (const Tableau& t : ts) out.push_back(to_text(t));
        std::cout << out.dump() << '\n';
    } else {
        for (const Tableau& t : ts) std::cout << to_text(t) << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime tableau toolkit for quantum affine sl(k) highest weights"};
    app.require_subcommand(1);

    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit JSON instead of text");

    std::string arg_a, arg_b;
    int k = 0, n = 0;

    auto add_kn = [&](CLI::App* cmd, bool need_k = true, bool need_n = true) {
        auto* ok = cmd->add_option("--k", k, "number of rows");
        auto* on = cmd->add_option("--n", n, "alphabet bound");
        if (need_k) ok->required();
        if (need_n) on->required();
    };

    auto* ws_cmd = app.add_subcommand("check-ws", "weak separation of two columns");
    ws_cmd->add_option("I", arg_a)->required();
    ws_cmd->add_option("J", arg_b)->required();
    ws_cmd->add_option("--n", n, "alphabet bound (optional, validates entries)");

    auto* nc_cmd = app.add_subcommand("check-noncrossing", "noncrossing relation of two columns");
    nc_cmd->add_option("I", arg_a)->required();
    nc_cmd->add_option("J", arg_b)->required();
    nc_cmd->add_option("--n", n, "alphabet bound (optional, validates entries)");

    auto* fact_cmd = app.add_subcommand("factorize", "noncrossing factorization of a tableau");
    fact_cmd->add_option("T", arg_a)->required();
    add_kn(fact_cmd);

    auto* tom_cmd = app.add_subcommand("to-monomial", "dominant monomial of a tableau class");
    tom_cmd->add_option("T", arg_a)->required();
    add_kn(tom_cmd);

    auto* tot_cmd = app.add_subcommand("to-tableau", "reduced tableau of a dominant monomial");
    tot_cmd->add_option("M", arg_a)->required();
    add_kn(tot_cmd);

    auto* red_cmd = app.add_subcommand("reduce", "remove the maximal trivial factor");
    red_cmd->add_option("T", arg_a)->required();
    add_kn(red_cmd);

    auto* prime_cmd = app.add_subcommand("is-prime", "2-column primality verdict");
    prime_cmd->add_option("T", arg_a)->required();
    add_kn(prime_cmd);

    auto* count_cmd = app.add_subcommand("count-prime", "number of 2-column prime tableaux");
    add_kn(count_cmd);

    int cols = 2;
    bool prime_only = false;
    auto* classify_cmd = app.add_subcommand("classify", "classify all 2-column tableaux");
    add_kn(classify_cmd);
    classify_cmd->add_option("--cols", cols, "column count (only 2 is supported)");
    classify_cmd->add_flag("--prime-only", prime_only, "list only the prime tableaux");

    int steps = 1;
    auto* promote_cmd = app.add_subcommand("promote", "apply promotion");
    promote_cmd->add_option("T", arg_a)->required();
    add_kn(promote_cmd);
    promote_cmd->add_option("--steps", steps, "number of promotions (default 1)");

    auto* orbit_cmd = app.add_subcommand("orbit", "promotion orbit");
    orbit_cmd->add_option("T", arg_a)->required();
    add_kn(orbit_cmd);

    std::string fixture_name, fixture_dir;
    auto* cover_cmd = app.add_subcommand("orbit-cover", "union of promotion orbits of a fixture list");
    cover_cmd->add_option("--fixtures", fixture_name, "fixture name")->required();
    cover_cmd->add_option("--fixtures-dir", fixture_dir,
                          "read <dir>/<name>.txt instead of the embedded list");

    bool quotient_mode = false;
    int max_cols = 6;
    auto* ch_cmd = app.add_subcommand("ch", "dual-canonical-basis expansion");
    ch_cmd->add_option("T", arg_a)->required();
    add_kn(ch_cmd);
    ch_cmd->add_flag("--quotient", quotient_mode, "set consecutive-window coordinates to 1");
    ch_cmd->add_option("--max-cols", max_cols, "column bound for the symmetric-group sum");

    auto* catalog_cmd = app.add_subcommand("catalog", "full 2-column catalog with fixture checks");
    add_kn(catalog_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*ws_cmd || *nc_cmd) {
            const Column a = parse_column(arg_a);
            const Column b = parse_column(arg_b);
            if (n > 0) {
                a.check_context(a.size(), n);
                b.check_context(b.size(), n);
            }
            const bool result = *ws_cmd ? weakly_separated(a, b) : noncrossing(a, b);
            if (json_mode) {
                std::cout << json{{*ws_cmd ? "weakly_separated" : "noncrossing", result}}.dump()
                          << '\n';
            } else {
                std::cout << (result ? "true" : "false") << '\n';
            }
        } else if (*fact_cmd) {
            const auto f = noncrossing_factorize(parse_tableau(arg_a, k, n));
            if (json_mode) {
                std::cout << to_json(f).dump() << '\n';
            } else {
                std::string out = "[";
                for (std::size_t i = 0; i < f.parts.size(); ++i) {
                    if (i) out += ',';
                    out += to_text(f.parts[i]);
                }
                std::cout << out << "]\n";
            }
        } else if (*tom_cmd) {
            const auto m = tableau_to_monomial(parse_tableau(arg_a, k, n));
            std::cout << (json_mode ? to_json(m).dump() : to_text(m)) << '\n';
        } else if (*tot_cmd) {
            const Tableau t = monomial_to_tableau(parse_monomial(arg_a, k, n));
            std::cout << (json_mode ? json(to_text(t)).dump() : to_text(t)) << '\n';
        } else if (*red_cmd) {
            const Tableau t = reduce(parse_tableau(arg_a, k, n));
            std::cout << (json_mode ? json(to_text(t)).dump() : to_text(t)) << '\n';
        } else if (*prime_cmd) {
            const PrimalityVerdict v = is_prime_2col(parse_tableau(arg_a, k, n));
            if (json_mode) {
                std::cout << to_json(v).dump() << '\n';
            } else {
                std::cout << "prime: " << (v.prime ? "true" : "false") << '\n';
                std::cout << "basis: " << to_string(v.basis)
                          << (v.conditional ? " (conditional)" : "") << '\n';
                std::string w = "[";
                for (std::size_t i = 0; i < v.witness.size(); ++i) {
                    if (i) w += ',';
                    w += to_text(v.witness[i]);
                }
                std::cout << "witness: " << w << "]\n";
            }
        } else if (*count_cmd) {
            const BigInt c = count_2col_prime(k, n);
            if (json_mode) {
                std::cout << json{{"k", k}, {"n", n}, {"prime", c.str()}}.dump() << '\n';
            } else {
                std::cout << c.str() << '\n';
            }
        } else if (*classify_cmd) {
            if (cols != 2) throw DomainError("only --cols 2 is supported");
            const Classification2Col c = classify_2col(k, n, thread_count());
            if (json_mode) {
                json out{{"k", k},
                         {"n", n},
                         {"totals",
                          {{"tableaux", std::to_string(c.prime.size() + c.nonprime.size())},
                           {"prime", std::to_string(c.prime.size())}}}};
                json prime = json::array();
                for (const Tableau& t : c.prime) prime.push_back(to_text(t));
                out["prime"] = prime;
                if (!prime_only) {
                    json nonprime = json::array();
                    for (const Tableau& t : c.nonprime) nonprime.push_back(to_text(t));
                    out["nonprime"] = nonprime;
                }
                std::cout << out.dump() << '\n';
            } else {
                for (const Tableau& t : c.prime) {
                    std::cout << to_text(t) << (prime_only ? "" : " prime") << '\n';
                }
                if (!prime_only) {
                    for (const Tableau& t : c.nonprime) std::cout << to_text(t) << " not-prime\n";
                }
            }
        } else if (*promote_cmd) {
            Tableau t = parse_tableau(arg_a, k, n);
            for (int i = 0; i < steps; ++i) t = promote(t);
            std::cout << (json_mode ? json(to_text(t)).dump() : to_text(t)) << '\n';
        } else if (*orbit_cmd) {
            print_tableau_lines(promotion_orbit(parse_tableau(arg_a, k, n)), json_mode);
        } else if (*cover_cmd) {
            const FixtureSet fs = fixture_dir.empty()
                ? fixture(fixture_name)
                : load_fixture_file(fixture_name, fixture_dir + "/" + fixture_name + ".txt");
            const std::set<Tableau> cover = orbit_cover(fs.tableaux());
            print_tableau_lines({cover.begin(), cover.end()}, json_mode);
        } else if (*ch_cmd) {
            PlueckerSum s = ch(parse_tableau(arg_a, k, n), max_cols);
            if (quotient_mode) s = s.quotient_normalized();
            if (json_mode) {
                std::cout << to_json(s).dump() << '\n';
            } else {
                std::cout << s.to_string() << '\n';
            }
        } else if (*catalog_cmd) {
            const CatalogReport r = catalog(k, n, thread_count());
            if (json_mode) {
                std::cout << to_json(r).dump() << '\n';
            } else {
                std::cout << "k=" << r.k << " n=" << r.n << '\n';
                std::cout << "tableaux: " << r.total.str() << '\n';
                std::cout << "prime: " << r.prime_count.str() << '\n';
                std::cout << "orbits: " << r.orbits.size() << '\n';
                std::cout << "promotion-closed: " << (r.promotion_closed ? "true" : "false")
                          << '\n';
                for (const FixtureCheck& c : r.fixture_checks) {
                    std::cout << "fixture " << c.name << ": expect " << c.expected << ", got "
                              << c.actual << " -> " << (c.pass ? "pass" : "FAIL") << '\n';
                }
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "guard violation: " << e.what() << '\n';
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
