#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "tabprime/enumeration.hpp"
#include "tabprime/tableau.hpp"

using namespace tabprime;

namespace {

Tableau t(int k, int n, std::vector<Column> cols) {
    return Tableau::from_columns(k, n, std::move(cols));
}

std::vector<Tableau> all_with_up_to(int k, int n, int max_m) {
    std::vector<Tableau> out;
    for (int m = 0; m <= max_m; ++m) {
        for (const Tableau& x : enumerate_ssyt(k, n, m)) out.push_back(x);
    }
    return out;
}

// Test-side reduction that removes removable consecutive columns in a
// random order; used against reduce() for the confluence property.
Tableau random_order_reduce(const Tableau& start, std::mt19937& rng) {
    Tableau cur = start;
    while (true) {
        std::vector<Tableau> removable;
        for (int a = 1; a + cur.k() - 1 <= cur.n(); ++a) {
            Tableau triv = Tableau::from_columns(cur.k(), cur.n(),
                                                 {consecutive_column(a, cur.k())});
            if (!cur.empty() && is_factor(triv, cur)) removable.push_back(std::move(triv));
        }
        if (removable.empty()) return cur;
        std::uniform_int_distribution<std::size_t> pick(0, removable.size() - 1);
        cur = Tableau::from_rows(cur.k(), cur.n(), quotient(cur, removable[pick(rng)]));
    }
}

} // namespace

TEST_CASE("validation and canonical form") {
    const Tableau a = t(4, 8, {{1, 2, 4, 6}, {3, 5, 7, 8}});
    REQUIRE(a.m() == 2);
    REQUIRE(a.column(0) == Column{1, 2, 4, 6});
    REQUIRE(a.row(0) == std::vector<int>{1, 3});

    REQUIRE(t(3, 6, {}).empty());

    // Columns in any order, even when the naive grid would not be
    // row-sorted: {1,6},{2,5} canonicalizes to rows (1,2),(5,6).
    const Tableau b = t(2, 8, {{1, 6}, {2, 5}});
    REQUIRE(b.columns() == std::vector<Column>{{1, 5}, {2, 6}});

    REQUIRE_THROWS_AS(t(2, 4, {{1, 5}}), EntryOutOfRangeError);
    REQUIRE_THROWS_AS(t(2, 4, {{1, 1}}), NotSemistandardError);
    REQUIRE_THROWS_AS(t(3, 8, {{1, 2}}), SizeMismatchError);

    REQUIRE_THROWS_AS(Tableau::from_rows(2, 4, {{2, 1}, {3, 4}}), NotSemistandardError);
    REQUIRE_THROWS_AS(Tableau::from_rows(2, 4, {{1, 2}, {1, 3}}), NotSemistandardError);
}

TEST_CASE("text round trip") {
    const std::string s = "[[1,2,4,6],[3,5,7,8]]";
    REQUIRE(to_text(parse_tableau(s, 4, 8)) == s);
    REQUIRE(to_text(parse_tableau("[]", 4, 8)) == "[]");
    // arbitrary column order canonicalizes
    REQUIRE(to_text(parse_tableau("[[3,5,7,8],[1,2,4,6]]", 4, 8)) == s);
    REQUIRE_THROWS_AS(parse_tableau("[[1,2]", 2, 4), ParseError);
    REQUIRE_THROWS_AS(parse_tableau("nope", 2, 4), ParseError);
}

TEST_CASE("union: worked example and identities") {
    const Tableau u = t(2, 9, {{1, 9}, {2, 8}, {3, 5}, {3, 6}, {2, 3}, {4, 5}});
    REQUIRE(u.row(0) == std::vector<int>{1, 2, 2, 3, 3, 4});
    REQUIRE(u.row(1) == std::vector<int>{3, 5, 5, 6, 8, 9});

    const Tableau s = t(2, 9, {{1, 4}, {2, 5}});
    REQUIRE(tableau_union(s, Tableau(2, 9)) == s);
    REQUIRE(tableau_union(Tableau(2, 9), s) == s);

    const Tableau two = tableau_union(t(2, 4, {{1, 3}}), t(2, 4, {{2, 4}}));
    REQUIRE(two.row(0) == std::vector<int>{1, 2});
    REQUIRE(two.row(1) == std::vector<int>{3, 4});
    REQUIRE(two.columns() == std::vector<Column>{{1, 3}, {2, 4}});
}

TEST_CASE("union is commutative and associative with identity") {
    // exhaustive commutativity at (2,4) and (3,5), m <= 2
    for (auto [k, n] : {std::pair{2, 4}, std::pair{3, 5}}) {
        const auto all = all_with_up_to(k, n, 2);
        for (const Tableau& a : all) {
            for (const Tableau& b : all) {
                REQUIRE(tableau_union(a, b) == tableau_union(b, a));
            }
        }
    }
    // exhaustive associativity at (2,4), m <= 1
    const auto small = all_with_up_to(2, 4, 1);
    for (const Tableau& a : small) {
        for (const Tableau& b : small) {
            for (const Tableau& c : small) {
                REQUIRE(tableau_union(tableau_union(a, b), c) ==
                        tableau_union(a, tableau_union(b, c)));
            }
        }
    }
    // random associativity at (3,6)
    std::mt19937 rng(20240811);
    const auto pool = all_with_up_to(3, 6, 2);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int it = 0; it < 500; ++it) {
        const Tableau &a = pool[pick(rng)], &b = pool[pick(rng)], &c = pool[pick(rng)];
        REQUIRE(tableau_union(tableau_union(a, b), c) == tableau_union(a, tableau_union(b, c)));
    }
}

TEST_CASE("factor and quotient") {
    const Tableau big = t(2, 9, {{1, 9}, {2, 8}, {3, 5}, {3, 6}, {2, 3}, {4, 5}});
    REQUIRE(is_factor(t(2, 9, {{2, 3}}), big));
    REQUIRE_FALSE(is_factor(t(2, 9, {{1, 2}}), big));

    // quotient(T, 1) = T
    const Grid g = quotient(big, Tableau(2, 9));
    REQUIRE(g == big.rows());

    REQUIRE_THROWS_AS(quotient(t(2, 9, {{1, 2}}), big), NotAFactorError);

    // quotient of the small-gap form by the original is the trivial grid
    // with columns {2,3,4,5},{4,5,6,7}
    const Tableau orig = t(4, 8, {{1, 2, 4, 6}, {3, 5, 7, 8}});
    const Tableau gap = t(4, 8, {{1, 2, 4, 5}, {2, 3, 4, 6}, {3, 5, 6, 7}, {4, 5, 7, 8}});
    REQUIRE(is_factor(orig, gap));
    const Grid diff = quotient(gap, orig);
    REQUIRE(diff == Grid{{2, 4}, {3, 5}, {4, 6}, {5, 7}});
    const Tableau diff_t = Tableau::from_rows(4, 8, diff);
    REQUIRE(is_trivial(diff_t));
}

TEST_CASE("quotient of a union recovers the other part") {
    std::mt19937 rng(7);
    const auto pool = all_with_up_to(3, 7, 2);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int it = 0; it < 400; ++it) {
        const Tableau &s = pool[pick(rng)], &u = pool[pick(rng)];
        REQUIRE(quotient(tableau_union(s, u), s) == u.rows());
    }
}

TEST_CASE("trivial tableaux and reduction") {
    REQUIRE(is_trivial(t(2, 4, {{2, 3}})));
    REQUIRE(is_trivial(Tableau(2, 4)));
    REQUIRE_FALSE(is_trivial(t(2, 4, {{2, 4}})));
    REQUIRE(reduce(t(2, 4, {{2, 3}})).empty());

    const Tableau big = t(2, 9, {{1, 9}, {2, 8}, {3, 5}, {3, 6}, {2, 3}, {4, 5}});
    REQUIRE(reduce(big).columns() == std::vector<Column>{{1, 5}, {2, 6}, {3, 8}, {3, 9}});

    const Tableau untouched = t(2, 9, {{1, 5}, {2, 6}, {3, 8}, {3, 9}});
    REQUIRE(reduce(untouched) == untouched);
}

TEST_CASE("reduce is confluent and idempotent") {
    std::mt19937 rng(99);
    for (int k = 1; k <= 4; ++k) {
        for (int n = k; n <= 7; ++n) {
            for (int m = 0; m <= 2; ++m) {
                for (const Tableau& x : enumerate_ssyt(k, n, m)) {
                    const Tableau r = reduce(x);
                    REQUIRE(reduce(r) == r);
                    REQUIRE(random_order_reduce(x, rng) == r);
                }
            }
        }
    }
    // spot checks with three columns
    std::mt19937 rng2(100);
    const auto pool = enumerate_ssyt(4, 8, 3);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int it = 0; it < 300; ++it) {
        const Tableau& x = pool[pick(rng2)];
        REQUIRE(random_order_reduce(x, rng2) == reduce(x));
    }
}

TEST_CASE("equivalence compares reductions") {
    const Tableau a = t(2, 6, {{1, 4}});
    REQUIRE(equivalent(a, tableau_union(a, t(2, 6, {{3, 4}}))));

    const Tableau orig = t(4, 8, {{1, 2, 4, 6}, {3, 5, 7, 8}});
    const Tableau gap = t(4, 8, {{1, 2, 4, 5}, {2, 3, 4, 6}, {3, 5, 6, 7}, {4, 5, 7, 8}});
    REQUIRE(equivalent(orig, gap));

    REQUIRE_FALSE(equivalent(t(2, 6, {{1, 4}}), t(2, 6, {{1, 5}})));
}
