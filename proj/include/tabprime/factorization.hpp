#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tabprime/correspondence.hpp"
#include "tabprime/errors.hpp"
#include "tabprime/separation.hpp"
#include "tabprime/tableau.hpp"

namespace tabprime {

/// A maximal q-string Y_{1,s} Y_{1,s-2} ... Y_{1,s-2r+2}: top spectral
/// parameter s and length r >= 1. Corresponds to the 2-row column
/// {a, a+r+1} with a = (1-s)/2.
struct QString {
    int s = 0;
    int r = 0;

    friend bool operator==(const QString&, const QString&) = default;
    friend auto operator<=>(const QString&, const QString&) = default;
};

inline Column qstring_column(const QString& q) {
    const int a = (1 - q.s) / 2;
    return Column{a, a + q.r + 1};
}

/// Greedy extraction of maximal strings from an sl2 monomial (all factors
/// of color 1), starting each string at the largest remaining s and walking
/// down in steps of 2 while factors remain.
inline std::vector<QString> kr_string_decomposition(const DominantMonomial& m) {
    std::map<int, int> remaining; // position a = (1-s)/2 -> multiplicity
    for (const auto& [v, e] : m.factors()) {
        if (v.i != 1) throw DomainError("kr_string_decomposition: factor of color != 1");
        remaining[(1 - v.s) / 2] += e;
    }
    std::vector<QString> out;
    while (!remaining.empty()) {
        const int a0 = remaining.begin()->first;
        int a = a0;
        int r = 0;
        while (true) {
            auto it = remaining.find(a);
            if (it == remaining.end()) break;
            if (--it->second == 0) remaining.erase(it);
            ++r;
            ++a;
        }
        out.push_back({1 - 2 * a0, r});
    }
    return out;
}

/// The unique unordered multiset of pairwise noncrossing one-column
/// tableaux whose union is the source tableau.
struct NoncrossingFactorization {
    Tableau source;
    std::vector<Column> parts; // sorted lexicographically

    [[nodiscard]] bool pairwise_noncrossing() const {
        for (std::size_t x = 0; x < parts.size(); ++x) {
            for (std::size_t y = x + 1; y < parts.size(); ++y) {
                if (!noncrossing(parts[x], parts[y])) return false;
            }
        }
        return true;
    }
};

namespace detail {

inline std::vector<Column> factor_parts(const Tableau& t);

// Base case k = 2: strip the consecutive factor columns, then decompose the
// reduced monomial into maximal q-strings.
inline std::vector<Column> factor_parts_2row(const Tableau& t) {
    const Tableau r = reduce(t);
    std::vector<Column> parts;
    if (r.m() < t.m()) {
        const Tableau trivial = Tableau::from_rows(t.k(), t.n(), quotient(t, r));
        parts = trivial.columns();
    }
    for (const QString& q : kr_string_decomposition(tableau_to_monomial(r))) {
        parts.push_back(qstring_column(q));
    }
    return parts;
}

// Inductive step: factor the first and last k-1 rows, group the sub-parts
// by their shared middle (k-2 entries), and fuse. Within a group the window
// condition forces first entries ascending to pair with last entries
// descending; a verified fallback search over in-group bijections remains
// in case the heuristic candidate fails the noncrossing certificate.
inline std::vector<Column> factor_parts_tall(const Tableau& t) {
    const int k = t.k();
    Grid rows = t.rows();
    const Grid top(rows.begin(), rows.end() - 1);
    const Grid bottom(rows.begin() + 1, rows.end());
    const std::vector<Column> sp = factor_parts(Tableau::from_rows(k - 1, t.n(), top));
    const std::vector<Column> spp = factor_parts(Tableau::from_rows(k - 1, t.n(), bottom));

    std::map<std::vector<int>, std::pair<std::vector<Column>, std::vector<Column>>> groups;
    for (const Column& c : sp) {
        groups[std::vector<int>(c.begin() + 1, c.end())].first.push_back(c);
    }
    for (const Column& c : spp) {
        groups[std::vector<int>(c.begin(), c.end() - 1)].second.push_back(c);
    }

    std::vector<std::vector<Column>> tops, bottoms;
    for (auto& [mid, group] : groups) {
        auto& [a, b] = group;
        if (a.size() != b.size()) {
            throw InternalInconsistencyError("factorization middles do not match");
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end(), [](const Column& x, const Column& y) {
            return x.back() > y.back();
        });
        tops.push_back(std::move(a));
        bottoms.push_back(std::move(b));
    }

    auto fuse = [&](const std::vector<std::vector<Column>>& chosen) {
        std::vector<Column> parts;
        for (std::size_t g = 0; g < tops.size(); ++g) {
            for (std::size_t x = 0; x < tops[g].size(); ++x) {
                std::vector<int> e(tops[g][x].begin(), tops[g][x].end());
                e.push_back(chosen[g][x].back());
                parts.emplace_back(std::move(e));
            }
        }
        return parts;
    };
    auto certified = [&](const std::vector<Column>& parts) {
        for (std::size_t x = 0; x < parts.size(); ++x) {
            for (std::size_t y = x + 1; y < parts.size(); ++y) {
                if (!noncrossing(parts[x], parts[y])) return false;
            }
        }
        return true;
    };

    std::vector<Column> candidate = fuse(bottoms);
    if (certified(candidate)) return candidate;

    // Fallback: distinct bijections within each group.
    std::vector<std::vector<Column>> perm = bottoms;
    for (auto& p : perm) std::sort(p.begin(), p.end());
    std::vector<std::vector<std::vector<Column>>> options(perm.size());
    for (std::size_t g = 0; g < perm.size(); ++g) {
        do {
            options[g].push_back(perm[g]);
        } while (std::next_permutation(perm[g].begin(), perm[g].end()));
    }
    std::vector<std::vector<Column>> chosen(perm.size());
    const std::function<bool(std::size_t)> search = [&](std::size_t g) -> bool {
        if (g == options.size()) {
            candidate = fuse(chosen);
            return certified(candidate);
        }
        for (const auto& opt : options[g]) {
            chosen[g] = opt;
            if (search(g + 1)) return true;
        }
        return false;
    };
    if (!search(0)) {
        throw InternalInconsistencyError("no noncrossing pairing for " + to_text(t));
    }
    return candidate;
}

inline std::vector<Column> factor_parts(const Tableau& t) {
    if (t.empty()) return {};
    if (t.k() == 1) {
        std::vector<Column> parts;
        for (const Column& c : t.columns()) parts.push_back(c);
        return parts;
    }
    if (t.m() == 1) return {t.column(0)};
    if (t.k() == 2) return factor_parts_2row(t);
    return factor_parts_tall(t);
}

} // namespace detail

inline NoncrossingFactorization noncrossing_factorize(const Tableau& t) {
    std::vector<Column> parts = detail::factor_parts(t);
    std::sort(parts.begin(), parts.end());
    NoncrossingFactorization f{t, std::move(parts)};
    if (Tableau::from_columns(t.k(), t.n(), f.parts) != t) {
        throw InternalInconsistencyError("factorization does not reassemble " + to_text(t));
    }
    return f;
}

/// Independent oracle: enumerate every distribution of each row's multiset
/// across m strictly increasing columns, keep the pairwise noncrossing
/// multisets, and insist exactly one survives.
inline NoncrossingFactorization brute_force_factorize(const Tableau& t) {
    const int k = t.k();
    const int m = t.m();
    if (m <= 1) return {t, t.columns()};
    double cost = 1;
    for (int i = 0; i < k; ++i) {
        cost *= m;
        if (cost > 1e7) throw GuardError("brute_force_factorize: m^k exceeds 10^7");
    }

    // Distinct permutations of every row, precomputed.
    std::vector<std::vector<std::vector<int>>> row_perms(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::vector<int> row = t.row(i);
        do {
            row_perms[static_cast<std::size_t>(i)].push_back(row);
        } while (std::next_permutation(row.begin(), row.end()));
    }

    std::set<std::vector<Column>> found;
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(m));
    const std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            std::vector<Column> parts;
            parts.reserve(static_cast<std::size_t>(m));
            for (const auto& c : cols) parts.emplace_back(c);
            std::sort(parts.begin(), parts.end());
            bool ok = true;
            for (std::size_t x = 0; x < parts.size() && ok; ++x) {
                for (std::size_t y = x + 1; y < parts.size() && ok; ++y) {
                    ok = noncrossing(parts[x], parts[y]);
                }
            }
            if (ok) found.insert(std::move(parts));
            return;
        }
        for (const auto& perm : row_perms[static_cast<std::size_t>(i)]) {
            bool ok = true;
            for (int a = 0; a < m && ok; ++a) {
                ok = cols[static_cast<std::size_t>(a)].empty() ||
                     cols[static_cast<std::size_t>(a)].back() < perm[static_cast<std::size_t>(a)];
            }
            if (!ok) continue;
            for (int a = 0; a < m; ++a) cols[static_cast<std::size_t>(a)].push_back(perm[static_cast<std::size_t>(a)]);
            rec(i + 1);
            for (int a = 0; a < m; ++a) cols[static_cast<std::size_t>(a)].pop_back();
        }
    };
    rec(0);

    if (found.empty()) {
        throw InternalInconsistencyError("no noncrossing factorization of " + to_text(t));
    }
    if (found.size() > 1) {
        throw InternalInconsistencyError("multiple noncrossing factorizations of " + to_text(t));
    }
    return {t, *found.begin()};
}

/// All unordered pairs (S1, S2) of strictly increasing columns whose
/// row-wise union equals the 2-column tableau. Generated from the 2^(k-1)
/// row-swap patterns and filtered for column validity.
inline std::vector<std::pair<Column, Column>> repairings_2col(const Tableau& t) {
    if (t.m() != 2) throw WrongColumnCountError("repairings_2col: tableau must have 2 columns");
    const int k = t.k();
    std::set<std::pair<Column, Column>> out;
    for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<int> a{t.row(0)[0]}, b{t.row(0)[1]};
        bool ok = true;
        for (int i = 1; i < k && ok; ++i) {
            const auto row = t.row(i);
            const bool swap = (mask >> (i - 1)) & 1u;
            const int va = swap ? row[1] : row[0];
            const int vb = swap ? row[0] : row[1];
            if (va <= a.back() || vb <= b.back()) {
                ok = false;
            } else {
                a.push_back(va);
                b.push_back(vb);
            }
        }
        if (!ok) continue;
        Column ca(std::move(a)), cb(std::move(b));
        if (cb < ca) std::swap(ca, cb);
        out.emplace(std::move(ca), std::move(cb));
    }
    return {out.begin(), out.end()};
}

} // namespace tabprime
