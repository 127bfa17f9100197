#include <catch2/catch_amalgamated.hpp>

#include "tabprime/enumeration.hpp"
#include "tabprime/factorization.hpp"

using namespace tabprime;

TEST_CASE("kr string decomposition of the worked 2-row example") {
    DominantMonomial m(2, 9);
    m.multiply({1, -1});
    m.multiply({1, -3}, 2);
    m.multiply({1, -5}, 4);
    m.multiply({1, -7}, 3);
    m.multiply({1, -9}, 2);
    m.multiply({1, -11}, 2);
    m.multiply({1, -13});
    std::vector<Column> cols;
    for (const QString& q : kr_string_decomposition(m)) cols.push_back(qstring_column(q));
    std::sort(cols.begin(), cols.end());
    REQUIRE(cols == std::vector<Column>{{1, 9}, {2, 8}, {3, 5}, {3, 6}});

    DominantMonomial single(2, 9);
    single.multiply({1, -5});
    const auto strings = kr_string_decomposition(single);
    REQUIRE(strings == std::vector<QString>{{-5, 1}});
    REQUIRE(qstring_column(strings[0]) == Column{3, 5});

    REQUIRE(kr_string_decomposition(DominantMonomial(2, 9)).empty());
}

TEST_CASE("kr strings are pairwise weakly separated") {
    // over the reduced 2-row tableaux with up to 3 columns
    for (int n = 3; n <= 8; ++n) {
        for (int m = 1; m <= 3; ++m) {
            for (const Tableau& t : enumerate_ssyt(2, n, m)) {
                const Tableau r = reduce(t);
                std::vector<Column> cols;
                for (const QString& q : kr_string_decomposition(tableau_to_monomial(r))) {
                    cols.push_back(qstring_column(q));
                }
                for (std::size_t x = 0; x < cols.size(); ++x) {
                    for (std::size_t y = x + 1; y < cols.size(); ++y) {
                        REQUIRE(weakly_separated(cols[x], cols[y]));
                    }
                }
            }
        }
    }
}

TEST_CASE("worked factorizations") {
    const auto pair48 = noncrossing_factorize(parse_tableau("[[1,3,5,7],[2,4,6,8]]", 4, 8));
    REQUIRE(pair48.parts == std::vector<Column>{{1, 4, 5, 8}, {2, 3, 6, 7}});

    const auto six = noncrossing_factorize(
        Tableau::from_columns(2, 9, {{1, 9}, {2, 8}, {3, 5}, {3, 6}, {2, 3}, {4, 5}}));
    REQUIRE(six.parts ==
            std::vector<Column>{{1, 9}, {2, 3}, {2, 8}, {3, 5}, {3, 6}, {4, 5}});

    const auto triple = noncrossing_factorize(parse_tableau("[[1,4,7],[2,5,8],[3,6,9]]", 3, 9));
    REQUIRE(triple.parts == std::vector<Column>{{1, 6, 7}, {2, 5, 8}, {3, 4, 9}});

    const Tableau one = Tableau::from_columns(3, 6, {{1, 4, 6}});
    REQUIRE(noncrossing_factorize(one).parts == one.columns());
    REQUIRE(noncrossing_factorize(Tableau(3, 6)).parts.empty());
}

TEST_CASE("factorization reassembles and certifies") {
    for (const Tableau& t : enumerate_ssyt(3, 7, 3)) {
        const auto f = noncrossing_factorize(t);
        REQUIRE(static_cast<int>(f.parts.size()) == t.m());
        REQUIRE(f.pairwise_noncrossing());
        REQUIRE(Tableau::from_columns(t.k(), t.n(), f.parts) == t);
    }
}

TEST_CASE("brute force oracle") {
    const auto f = brute_force_factorize(parse_tableau("[[1,3],[2,4]]", 2, 4));
    REQUIRE(f.parts == std::vector<Column>{{1, 4}, {2, 3}});

    const Tableau one = Tableau::from_columns(2, 4, {{1, 3}});
    REQUIRE(brute_force_factorize(one).parts == one.columns());

    // 6^10 assignments exceed the guard
    const Column tall({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    const Tableau wide = Tableau::from_columns(10, 15, std::vector<Column>(6, tall));
    REQUIRE_THROWS_AS(brute_force_factorize(wide), GuardError);
}

TEST_CASE("oracle agreement on 2-column tableaux (k <= 3) and 3-column spots") {
    for (int k = 1; k <= 3; ++k) {
        for (int n = k; n <= 7; ++n) {
            for (const Tableau& t : enumerate_ssyt(k, n, 2)) {
                REQUIRE(noncrossing_factorize(t).parts == brute_force_factorize(t).parts);
            }
        }
    }
    for (const Tableau& t : enumerate_ssyt(3, 6, 3)) {
        REQUIRE(noncrossing_factorize(t).parts == brute_force_factorize(t).parts);
    }
    // the equal-middle pairing case that defeats a naive sorted-sorted fuse
    const Tableau tricky = Tableau::from_columns(3, 8, {{1, 4, 7}, {2, 4, 8}});
    REQUIRE(noncrossing_factorize(tricky).parts == std::vector<Column>{{1, 4, 8}, {2, 4, 7}});
    REQUIRE(brute_force_factorize(tricky).parts == noncrossing_factorize(tricky).parts);
}

TEST_CASE("repairings of the Lemma-style union") {
    const Tableau t = Tableau::from_columns(4, 8, {{1, 4, 5, 8}, {2, 3, 6, 7}});
    const auto pairs = repairings_2col(t);
    const std::vector<std::pair<Column, Column>> expect = {
        {{1, 3, 5, 7}, {2, 4, 6, 8}}, {{1, 3, 5, 8}, {2, 4, 6, 7}},
        {{1, 3, 6, 7}, {2, 4, 5, 8}}, {{1, 3, 6, 8}, {2, 4, 5, 7}},
        {{1, 4, 5, 7}, {2, 3, 6, 8}}, {{1, 4, 5, 8}, {2, 3, 6, 7}},
        {{1, 4, 6, 7}, {2, 3, 5, 8}}, {{1, 4, 6, 8}, {2, 3, 5, 7}},
    };
    REQUIRE(pairs == expect);
    for (const auto& [a, b] : pairs) REQUIRE_FALSE(weakly_separated(a, b));
}

TEST_CASE("repairings edge cases") {
    const auto two = repairings_2col(parse_tableau("[[1,3],[2,4]]", 2, 4));
    REQUIRE(two == std::vector<std::pair<Column, Column>>{{{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}});

    const Tableau same = Tableau::from_columns(3, 6, {{1, 3, 5}, {1, 3, 5}});
    REQUIRE(repairings_2col(same) ==
            std::vector<std::pair<Column, Column>>{{{1, 3, 5}, {1, 3, 5}}});

    REQUIRE_THROWS_AS(repairings_2col(Tableau(2, 4)), WrongColumnCountError);
}

TEST_CASE("non-weakly-separated pairs re-pair badly (k <= 3, n <= 8)") {
    for (int k = 1; k <= 3; ++k) {
        for (int n = k; n <= 8; ++n) {
            const auto cols = enumerate_columns(k, n);
            for (std::size_t x = 0; x < cols.size(); ++x) {
                for (std::size_t y = x; y < cols.size(); ++y) {
                    if (!noncrossing(cols[x], cols[y]) || weakly_separated(cols[x], cols[y])) {
                        continue;
                    }
                    const Tableau t = Tableau::from_columns(k, n, {cols[x], cols[y]});
                    for (const auto& [a, b] : repairings_2col(t)) {
                        REQUIRE_FALSE(weakly_separated(a, b));
                    }
                }
            }
        }
    }
}
