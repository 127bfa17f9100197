#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "tabprime/errors.hpp"
#include "tabprime/factorization.hpp"
#include "tabprime/separation.hpp"
#include "tabprime/tableau.hpp"

namespace tabprime {

using BigInt = boost::multiprecision::cpp_int;

/// How a primality verdict was reached. The two-column criterion and the
/// pairwise screen are both conditional on an unproven statement (that a
/// simple tensor product of column modules forces weak separation); the
/// `conditional` flag on the verdict records this.
enum class VerdictBasis {
    two_column_criterion,
    pairwise_screen,
    fixture,
};

inline const char* to_string(VerdictBasis b) {
    switch (b) {
        case VerdictBasis::two_column_criterion: return "two-column-criterion";
        case VerdictBasis::pairwise_screen: return "pairwise-screen";
        case VerdictBasis::fixture: return "fixture";
    }
    return "?";
}

struct PrimalityVerdict {
    bool prime = false;
    VerdictBasis basis = VerdictBasis::two_column_criterion;
    bool conditional = true;
    std::vector<Column> witness; // the noncrossing factorization examined
};

/// Two-column primality: a 2-column tableau is prime exactly when its
/// noncrossing pair is not weakly separated. Accepts a raw 2-column tableau
/// (a pair containing a trivial column is weakly separated, hence not
/// prime) or any tableau whose reduction has exactly 2 columns.
inline PrimalityVerdict is_prime_2col(const Tableau& t) {
    const Tableau* target = &t;
    Tableau reduced;
    if (t.m() != 2) {
        reduced = reduce(t);
        if (reduced.m() != 2) {
            throw WrongColumnCountError("is_prime_2col: class of " + to_text(t) +
                                        " is not 2-column");
        }
        target = &reduced;
    }
    NoncrossingFactorization f = noncrossing_factorize(*target);
    PrimalityVerdict v;
    v.prime = !weakly_separated(f.parts[0], f.parts[1]);
    v.basis = VerdictBasis::two_column_criterion;
    v.conditional = true;
    v.witness = std::move(f.parts);
    return v;
}

/// The multi-column sufficiency screen: true iff every pair in the
/// noncrossing factorization of the reduced tableau fails weak separation.
/// Vacuously true for at most one part.
inline bool conjecture_condition(const Tableau& t) {
    const NoncrossingFactorization f = noncrossing_factorize(reduce(t));
    for (std::size_t x = 0; x < f.parts.size(); ++x) {
        for (std::size_t y = x + 1; y < f.parts.size(); ++y) {
            if (weakly_separated(f.parts[x], f.parts[y])) return false;
        }
    }
    return true;
}

inline PrimalityVerdict screen_verdict(const Tableau& t) {
    NoncrossingFactorization f = noncrossing_factorize(reduce(t));
    PrimalityVerdict v;
    v.prime = true;
    for (std::size_t x = 0; x < f.parts.size() && v.prime; ++x) {
        for (std::size_t y = x + 1; y < f.parts.size() && v.prime; ++y) {
            if (weakly_separated(f.parts[x], f.parts[y])) v.prime = false;
        }
    }
    v.basis = VerdictBasis::pairwise_screen;
    v.conditional = true;
    v.witness = std::move(f.parts);
    return v;
}

// ---------------------------------------------------------------------------
// Exact counting.
// ---------------------------------------------------------------------------

inline BigInt binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    BigInt out = 1;
    for (int i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

/// n! / (a! b! c!), zero when any part is negative or the parts do not sum
/// to n.
inline BigInt multinomial(int n, int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0 || a + b + c != n) return 0;
    return binomial(n, a) * binomial(n - a, b);
}

/// Number of rectangular semistandard tableaux with k rows, m columns and
/// entries in [1, n]: prod (n-i+j) / (k+m-i-j+1). Computed as an exact
/// ratio; the division is asserted exact.
inline BigInt rect_ssyt_count(int k, int n, int m) {
    if (k < 0 || m < 0 || n < k) throw DomainError("rect_ssyt_count: bad shape");
    BigInt num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= m; ++j) {
            num *= n - i + j;
            den *= k + m - i - j + 1;
        }
    }
    if (den == 0 || num % den != 0) {
        throw InternalInconsistencyError("rect_ssyt_count: inexact division");
    }
    return num / den;
}

/// Number of unordered weakly separated pairs of k-columns in [1, n]:
/// C(n,k) + sum_j j * (n; k-j, 2j, n-k-j). Valid for k <= n/2.
inline BigInt weakly_separated_pair_count(int k, int n) {
    BigInt out = binomial(n, k);
    for (int j = 1; j <= k; ++j) {
        out += j * multinomial(n, k - j, 2 * j, n - k - j);
    }
    return out;
}

/// Exact number of 2-column prime tableaux, valid in the regime k <= n/2.
inline BigInt count_2col_prime(int k, int n) {
    if (2 * k > n) {
        throw GuardError("count_2col_prime: formula requires k <= n/2; use classification");
    }
    return rect_ssyt_count(k, n, 2) - weakly_separated_pair_count(k, n);
}

/// Auxiliary conjectural count of 2-column cluster variables:
/// sum_{r=3}^{k} ((2r/3) p1(r) + 2r p2(r) + 4r p3(r)) C(n,2r) C(n-2r,k-r),
/// where p_i(r) counts partitions r = r1+r2+r3 (parts >= 1) with i distinct
/// parts. Emitted uninterpreted.
inline BigInt conjectural_cluster_variable_count(int k, int n) {
    if (2 * k > n) throw GuardError("conjectural_cluster_variable_count: requires k <= n/2");
    BigInt out = 0;
    for (int r = 3; r <= k; ++r) {
        int p[4] = {0, 0, 0, 0};
        for (int r1 = 1; r1 <= r; ++r1) {
            for (int r2 = r1; r1 + r2 <= r; ++r2) {
                const int r3 = r - r1 - r2;
                if (r3 < r2) continue;
                int distinct = 1 + (r2 != r1) + (r3 != r2);
                ++p[distinct];
            }
        }
        // (2r/3) p1(r): p1(r) is nonzero only when 3 | r, so the term stays
        // integral; computed as 2r*p1/3 in exact arithmetic.
        BigInt weight = BigInt(2 * r * p[1]) / 3 + BigInt(2 * r) * p[2] + BigInt(4 * r) * p[3];
        out += weight * binomial(n, 2 * r) * binomial(n - 2 * r, k - r);
    }
    return out;
}

} // namespace tabprime
