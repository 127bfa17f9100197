#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "tabprime/errors.hpp"
#include "tabprime/tableau.hpp"

namespace tabprime {

namespace detail {

// One direction of the weak-separation split: A = A1 | A2 (prefix/suffix in
// sorted order) with max(A1) < min(B) and max(B) < min(A2). Any admissible
// partition of A is forced to be a prefix/suffix split, so scanning prefixes
// is complete.
inline bool splits_around(std::span<const int> a, std::span<const int> b) {
    const std::size_t d = a.size();
    for (std::size_t t = 0; t <= d; ++t) {
        const bool left_ok = t == 0 || b.empty() || a[t - 1] < b.front();
        const bool right_ok = t == d || b.empty() || b.back() < a[t];
        if (left_ok && right_ok) return true;
    }
    return false;
}

inline void set_difference_into(std::span<const int> x, std::span<const int> y,
                                std::vector<int>& out) {
    out.clear();
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
}

inline bool weakly_separated_sorted(std::span<const int> i, std::span<const int> j) {
    std::vector<int> a, b;
    set_difference_into(i, j, a);
    set_difference_into(j, i, b);
    return splits_around(a, b) || splits_around(b, a);
}

} // namespace detail

/// Two equal-size subsets are weakly separated when one difference set
/// splits around the other: I\J = I1 | I2 with I1 < J\I < I2, or the
/// symmetric condition. Empty parts are allowed, so I = J qualifies.
inline bool weakly_separated(const Column& i, const Column& j) {
    if (i.size() != j.size()) {
        throw SizeMismatchError("weakly_separated: |I| != |J|");
    }
    return detail::weakly_separated_sorted(i.entries(), j.entries());
}

/// Literal evaluation of the noncrossing condition: for every index window
/// a..b, either the two windows are weakly separated or their interiors
/// differ as sets. Size-2 windows have empty (equal) interiors, so all
/// adjacent pairs must be weakly separated.
inline bool noncrossing(const Column& i, const Column& j) {
    if (i.size() != j.size()) {
        throw SizeMismatchError("noncrossing: |I| != |J|");
    }
    const int k = i.size();
    const std::span<const int> iv(i.entries());
    const std::span<const int> jv(j.entries());
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            const auto ii = iv.subspan(static_cast<std::size_t>(a), static_cast<std::size_t>(b - a + 1));
            const auto jj = jv.subspan(static_cast<std::size_t>(a), static_cast<std::size_t>(b - a + 1));
            if (std::equal(ii.begin() + 1, ii.end() - 1, jj.begin() + 1, jj.end() - 1) &&
                !detail::weakly_separated_sorted(ii, jj)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace tabprime
