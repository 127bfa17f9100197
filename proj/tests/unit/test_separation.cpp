#include <catch2/catch_amalgamated.hpp>

#include "tabprime/enumeration.hpp"
#include "tabprime/separation.hpp"

using namespace tabprime;

namespace {

// Independent oracle for weak separation: tries every bipartition of the
// difference set, not just prefix/suffix splits.
bool ws_brute(const Column& i, const Column& j) {
    std::vector<int> a, b;
    std::set_difference(i.begin(), i.end(), j.begin(), j.end(), std::back_inserter(a));
    std::set_difference(j.begin(), j.end(), i.begin(), i.end(), std::back_inserter(b));
    auto around = [](const std::vector<int>& x, const std::vector<int>& y) {
        for (unsigned mask = 0; mask < (1u << x.size()); ++mask) {
            bool ok = true;
            for (std::size_t p = 0; p < x.size() && ok; ++p) {
                if ((mask >> p) & 1u) { // x[p] in the left part
                    ok = y.empty() || x[p] < y.front();
                } else {
                    ok = y.empty() || x[p] > y.back();
                }
            }
            if (ok) return true;
        }
        return x.empty();
    };
    return around(a, b) || around(b, a);
}

} // namespace

TEST_CASE("weak separation examples") {
    REQUIRE_FALSE(weakly_separated(Column{1, 4, 5, 8}, Column{2, 3, 6, 7}));
    REQUIRE(weakly_separated(Column{1, 3, 5}, Column{1, 3, 5}));
    REQUIRE(weakly_separated(Column{1, 2}, Column{3, 4}));
    REQUIRE_FALSE(weakly_separated(Column{1, 3}, Column{2, 4}));
    REQUIRE_THROWS_AS(weakly_separated(Column{1, 2}, Column{1, 2, 3}), SizeMismatchError);
}

TEST_CASE("noncrossing examples") {
    REQUIRE(noncrossing(Column{1, 4, 5, 8}, Column{2, 3, 6, 7}));
    REQUIRE_FALSE(noncrossing(Column{1, 3, 5, 7}, Column{2, 4, 6, 8}));
    REQUIRE(noncrossing(Column{2, 4, 7}, Column{2, 4, 7}));
    REQUIRE_THROWS_AS(noncrossing(Column{1, 2}, Column{1, 2, 3}), SizeMismatchError);
}

TEST_CASE("prefix splits match the all-bipartitions oracle") {
    for (int k = 1; k <= 3; ++k) {
        for (int n = k; n <= 6; ++n) {
            const auto cols = enumerate_columns(k, n);
            for (const Column& a : cols) {
                for (const Column& b : cols) {
                    REQUIRE(weakly_separated(a, b) == ws_brute(a, b));
                }
            }
        }
    }
}

TEST_CASE("both predicates are symmetric") {
    const auto cols = enumerate_columns(3, 7);
    for (const Column& a : cols) {
        for (const Column& b : cols) {
            REQUIRE(weakly_separated(a, b) == weakly_separated(b, a));
            REQUIRE(noncrossing(a, b) == noncrossing(b, a));
        }
    }
}

TEST_CASE("for k = 2 noncrossing and weakly separated coincide") {
    for (int n = 2; n <= 8; ++n) {
        const auto cols = enumerate_columns(2, n);
        for (const Column& a : cols) {
            for (const Column& b : cols) {
                REQUIRE(noncrossing(a, b) == weakly_separated(a, b));
            }
        }
    }
}

TEST_CASE("weak separation implies noncrossing (k <= 5, n <= 10)") {
    for (int k = 1; k <= 5; ++k) {
        for (int n = k; n <= 10; ++n) {
            const auto cols = enumerate_columns(k, n);
            for (const Column& a : cols) {
                for (const Column& b : cols) {
                    if (weakly_separated(a, b)) REQUIRE(noncrossing(a, b));
                }
            }
        }
    }
}

TEST_CASE("consecutive columns are weakly separated from everything") {
    for (int k = 1; k <= 5; ++k) {
        for (int n = k; n <= 10; ++n) {
            const auto cols = enumerate_columns(k, n);
            for (int a = 1; a + k - 1 <= n; ++a) {
                const Column c = consecutive_column(a, k);
                for (const Column& b : cols) {
                    REQUIRE(weakly_separated(c, b));
                }
            }
        }
    }
}
