#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "tabprime/errors.hpp"
#include "tabprime/tableau.hpp"

namespace tabprime {

/// Bender-Knuth involution BK_i. Entries i with i+1 directly below in the
/// same column (and vice versa) are locked; in each row the free block of a
/// copies of i followed by b copies of i+1 becomes b copies of i followed
/// by a copies of i+1.
inline Tableau bender_knuth(const Tableau& t, int i) {
    if (i < 1 || i >= t.n()) {
        throw DomainError("bender_knuth: index " + std::to_string(i) + " outside [1," +
                          std::to_string(t.n() - 1) + "]");
    }
    if (t.empty()) return t;
    const int k = t.k();
    const int m = t.m();
    Grid rows = t.rows();
    Grid out = rows;
    for (int r = 0; r < k; ++r) {
        std::vector<int> free_cols;
        int free_i = 0;
        for (int a = 0; a < m; ++a) {
            const int v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)];
            if (v == i) {
                const bool locked = r + 1 < k &&
                    rows[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(a)] == i + 1;
                if (!locked) {
                    free_cols.push_back(a);
                    ++free_i;
                }
            } else if (v == i + 1) {
                const bool locked = r > 0 &&
                    rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(a)] == i;
                if (!locked) free_cols.push_back(a);
            }
        }
        // Free cells sit consecutively as [free i's][free i+1's]; swap the
        // block sizes.
        const int free_ip1 = static_cast<int>(free_cols.size()) - free_i;
        for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(free_cols[idx])] =
                static_cast<int>(idx) < free_ip1 ? i : i + 1;
        }
    }
    return Tableau::from_rows(k, t.n(), out);
}

/// pr = BK_1 o ... o BK_{n-1}: BK_{n-1} is applied first, BK_1 last.
inline Tableau promote(const Tableau& t) {
    Tableau cur = t;
    for (int i = t.n() - 1; i >= 1; --i) cur = bender_knuth(cur, i);
    return cur;
}

/// The promotion cycle through t, rotated so the lexicographically least
/// tableau comes first.
inline std::vector<Tableau> promotion_orbit(const Tableau& t) {
    std::vector<Tableau> cycle{t};
    Tableau cur = promote(t);
    while (cur != t) {
        cycle.push_back(cur);
        cur = promote(cur);
    }
    const auto least = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), least, cycle.end());
    return cycle;
}

/// Union of the promotion orbits of the seeds.
inline std::set<Tableau> orbit_cover(const std::vector<Tableau>& seeds) {
    std::set<Tableau> out;
    for (const Tableau& s : seeds) {
        for (const Tableau& t : promotion_orbit(s)) out.insert(t);
    }
    return out;
}

} // namespace tabprime
