#pragma once

#include <atomic>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tabprime/errors.hpp"
#include "tabprime/factorization.hpp"
#include "tabprime/fixtures.hpp"
#include "tabprime/primality.hpp"
#include "tabprime/promotion.hpp"
#include "tabprime/separation.hpp"
#include "tabprime/tableau.hpp"

namespace tabprime {

/// All C(n,k) columns in lexicographic order.
inline std::vector<Column> enumerate_columns(int k, int n) {
    std::vector<Column> out;
    if (k > n || k < 0) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.emplace_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

inline bool dominates(const Column& lo, const Column& hi) {
    for (int i = 0; i < lo.size(); ++i) {
        if (lo[i] > hi[i]) return false;
    }
    return true;
}

/// Visits every k x m semistandard tableau over [1, n] in lexicographic
/// column-sequence order.
inline void for_each_ssyt(int k, int n, int m,
                          const std::function<void(const Tableau&)>& visit) {
    if (m == 0) {
        visit(Tableau(k, n));
        return;
    }
    const std::vector<Column> cols = enumerate_columns(k, n);
    std::vector<Column> seq;
    const std::function<void()> rec = [&] {
        if (static_cast<int>(seq.size()) == m) {
            visit(Tableau::from_columns(k, n, seq));
            return;
        }
        for (const Column& c : cols) {
            if (!seq.empty() && !dominates(seq.back(), c)) continue;
            seq.push_back(c);
            rec();
            seq.pop_back();
        }
    };
    rec();
}

inline constexpr long long kEnumerationGuard = 1'000'000;

inline std::vector<Tableau> enumerate_ssyt(int k, int n, int m,
                                           long long guard = kEnumerationGuard) {
    if (rect_ssyt_count(k, n, m) > guard) {
        throw GuardError("enumerate_ssyt: count exceeds guard");
    }
    std::vector<Tableau> out;
    for_each_ssyt(k, n, m, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

// ---------------------------------------------------------------------------
// Classification of 2-column tableaux.
// ---------------------------------------------------------------------------

struct Classification2Col {
    std::vector<Tableau> prime;    // canonical enumeration order
    std::vector<Tableau> nonprime; // canonical enumeration order
};

/// Partitions the work across first columns; the merge restores canonical
/// order, so the output is independent of the worker count.
inline Classification2Col classify_2col(int k, int n, int threads = 1) {
    if (rect_ssyt_count(k, n, 2) > kEnumerationGuard) {
        throw GuardError("classify_2col: count exceeds guard");
    }
    const std::vector<Column> cols = enumerate_columns(k, n);
    std::vector<Classification2Col> slots(cols.size());

    auto handle_first = [&](std::size_t fi) {
        const Column& first = cols[fi];
        for (std::size_t si = fi; si < cols.size(); ++si) {
            if (!dominates(first, cols[si])) continue;
            Tableau t = Tableau::from_columns(k, n, {first, cols[si]});
            const NoncrossingFactorization f = noncrossing_factorize(t);
            const bool prime = !weakly_separated(f.parts[0], f.parts[1]);
            (prime ? slots[fi].prime : slots[fi].nonprime).push_back(std::move(t));
        }
    };

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, threads);
    if (threads == 1) {
        for (std::size_t fi = 0; fi < cols.size(); ++fi) handle_first(fi);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t fi = next.fetch_add(1); fi < cols.size(); fi = next.fetch_add(1)) {
                    handle_first(fi);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    Classification2Col out;
    for (auto& slot : slots) {
        // Within a slot the second column runs in lexicographic order, but
        // the canonical tableau order is by column sequence, so re-sort per
        // slot; slots themselves are already ordered by first column.
        std::sort(slot.prime.begin(), slot.prime.end());
        std::sort(slot.nonprime.begin(), slot.nonprime.end());
        out.prime.insert(out.prime.end(), slot.prime.begin(), slot.prime.end());
        out.nonprime.insert(out.nonprime.end(), slot.nonprime.begin(), slot.nonprime.end());
    }
    return out;
}

/// Exhaustive search for m-tuples of distinct columns that are pairwise
/// noncrossing and pairwise not weakly separated. Tuples with a repeated
/// column never qualify (equal columns are weakly separated).
inline std::vector<std::vector<Column>> noncrossing_nonws_tuples(int k, int n, int m) {
    const std::vector<Column> cols = enumerate_columns(k, n);
    std::vector<std::vector<Column>> out;
    std::vector<std::size_t> idx;
    const std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(idx.size()) == m) {
            std::vector<Column> tuple;
            tuple.reserve(idx.size());
            for (std::size_t i : idx) tuple.push_back(cols[i]);
            out.push_back(std::move(tuple));
            return;
        }
        for (std::size_t i = start; i < cols.size(); ++i) {
            bool ok = true;
            for (std::size_t j : idx) {
                if (!noncrossing(cols[j], cols[i]) || weakly_separated(cols[j], cols[i])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// Catalogs.
// ---------------------------------------------------------------------------

struct FixtureCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct CatalogReport {
    int k = 0;
    int n = 0;
    BigInt total = 0;
    BigInt prime_count = 0;
    std::vector<Tableau> primes;
    std::vector<std::vector<Tableau>> orbits; // promotion orbits of the prime set
    bool promotion_closed = true;
    std::vector<FixtureCheck> fixture_checks;
};

/// Structured reproduction of the catalog for (k, n): totals, the prime
/// list, its promotion-orbit decomposition, and cross-checks against the
/// shipped fixture lists where available.
inline CatalogReport catalog(int k, int n, int threads = 1) {
    CatalogReport report;
    report.k = k;
    report.n = n;
    report.total = rect_ssyt_count(k, n, 2);
    Classification2Col cls = classify_2col(k, n, threads);
    report.prime_count = static_cast<long long>(cls.prime.size());
    report.primes = std::move(cls.prime);

    const std::set<Tableau> prime_set(report.primes.begin(), report.primes.end());
    std::set<Tableau> seen;
    for (const Tableau& t : report.primes) {
        if (seen.count(t)) continue;
        std::vector<Tableau> orb = promotion_orbit(t);
        for (const Tableau& u : orb) {
            if (!prime_set.count(u)) report.promotion_closed = false;
            seen.insert(u);
        }
        report.orbits.push_back(std::move(orb));
    }

    auto cover_of = [](const FixtureSet& fs) { return orbit_cover(fs.tableaux()); };
    if (k == 4 && n == 8) {
        const FixtureSet& nonreal = fixture("gr48-nonreal");
        const FixtureSet& real = fixture("gr48-real-seeds");
        std::vector<Tableau> seeds = nonreal.tableaux();
        const auto real_seeds = real.tableaux();
        seeds.insert(seeds.end(), real_seeds.begin(), real_seeds.end());
        const std::set<Tableau> cover = orbit_cover(seeds);
        report.fixture_checks.push_back({"gr48-seed-cover-is-prime-set", "122",
                                         std::to_string(cover.size()),
                                         cover == prime_set});
        bool all_prime = true;
        for (const Tableau& t : seeds) all_prime = all_prime && prime_set.count(t) > 0;
        report.fixture_checks.push_back({"gr48-seeds-prime", "17 prime seeds",
                                         all_prime ? "17 prime seeds" : "non-prime seed",
                                         all_prime});
    } else if (k == 5 && n == 10) {
        const std::set<Tableau> nonreal_cover = cover_of(fixture("gr510-nonreal-seeds"));
        bool inside = true;
        for (const Tableau& t : nonreal_cover) inside = inside && prime_set.count(t) > 0;
        report.fixture_checks.push_back({"gr510-nonreal-cover", "197",
                                         std::to_string(nonreal_cover.size()),
                                         nonreal_cover.size() == 197 && inside});
        const BigInt real_count = report.prime_count - BigInt(nonreal_cover.size());
        report.fixture_checks.push_back({"gr510-real-count", "3260", real_count.str(),
                                         real_count == 3260});
        const std::set<Tableau> real_cover = cover_of(fixture("gr510-real-seeds"));
        bool disjoint = true;
        for (const Tableau& t : real_cover) {
            if (nonreal_cover.count(t)) disjoint = false;
            if (!prime_set.count(t)) inside = false;
        }
        report.fixture_checks.push_back({"gr510-real-seeds-disjoint",
                                         "disjoint from non-real cover",
                                         disjoint ? "disjoint from non-real cover" : "overlap",
                                         disjoint && inside});
    }
    return report;
}

} // namespace tabprime
