#pragma once

#include <json.hpp>

#include "tabprime/canonical_basis.hpp"
#include "tabprime/correspondence.hpp"
#include "tabprime/enumeration.hpp"
#include "tabprime/factorization.hpp"
#include "tabprime/primality.hpp"
#include "tabprime/tableau.hpp"

namespace tabprime {

using nlohmann::json;

inline json to_json(const Column& c) {
    json out = json::array();
    for (int v : c) out.push_back(v);
    return out;
}

inline json to_json(const Tableau& t) {
    json out = json::array();
    for (const Column& c : t.columns()) out.push_back(to_json(c));
    return out;
}

inline json to_json(const DominantMonomial& m) {
    json out = json::array();
    for (const auto& [v, e] : m.factors()) {
        out.push_back({{"i", v.i}, {"s", v.s}, {"exp", e}});
    }
    return out;
}

inline json to_json(const NoncrossingFactorization& f) {
    json out = json::array();
    for (const Column& c : f.parts) out.push_back(to_json(c));
    return out;
}

inline json to_json(const PrimalityVerdict& v) {
    json witness = json::array();
    for (const Column& c : v.witness) witness.push_back(to_json(c));
    return {{"prime", v.prime},
            {"basis", to_string(v.basis)},
            {"conditional", v.conditional},
            {"witness", witness}};
}

inline json to_json(const PlueckerSum& s) {
    json terms = json::array();
    for (const auto& [mono, coeff] : s.terms()) {
        json cols = json::array();
        for (const Column& c : mono) cols.push_back(to_json(c));
        terms.push_back({{"coeff", coeff}, {"monomial", cols}});
    }
    return {{"terms", terms}};
}

inline json to_json(const CatalogReport& r) {
    json primes = json::array();
    for (const Tableau& t : r.primes) primes.push_back(to_text(t));
    json orbits = json::array();
    for (const auto& orb : r.orbits) {
        json o = json::array();
        for (const Tableau& t : orb) o.push_back(to_text(t));
        orbits.push_back(o);
    }
    json checks = json::array();
    for (const FixtureCheck& c : r.fixture_checks) {
        checks.push_back({{"name", c.name},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
    }
    return {{"k", r.k},
            {"n", r.n},
            {"totals", {{"tableaux", r.total.str()}, {"prime", r.prime_count.str()}}},
            {"promotion_closed", r.promotion_closed},
            {"primes", primes},
            {"orbits", orbits},
            {"fixture_checks", checks}};
}

} // namespace tabprime
