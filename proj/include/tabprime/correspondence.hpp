#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tabprime/errors.hpp"
#include "tabprime/tableau.hpp"

namespace tabprime {

/// Index of a generator Y_{i,s}: color i in [1, k-1], spectral parameter s
/// with i - s even. Canonical order sorts by i ascending, then s descending.
struct YVariable {
    int i = 0;
    int s = 0;

    friend bool operator==(const YVariable&, const YVariable&) = default;
    friend bool operator<(const YVariable& x, const YVariable& y) {
        if (x.i != y.i) return x.i < y.i;
        return x.s > y.s;
    }
};

/// The fundamental one-column tableau attached to Y_{i,s}: the window
/// [a, a+k] with the entry a+k-i removed, where a = (i-s)/2.
inline Column fundamental_column(int i, int s, int k, int n) {
    if (i < 1 || i > k - 1) {
        throw OutOfWindowError("color " + std::to_string(i) + " outside [1," +
                               std::to_string(k - 1) + "]");
    }
    if (((i - s) % 2 + 2) % 2 != 0) {
        throw InvalidParityError("Y[" + std::to_string(i) + "," + std::to_string(s) +
                                 "]: i - s must be even");
    }
    const int a = (i - s) / 2;
    if (a < 1 || a + k > n) {
        throw OutOfWindowError("Y[" + std::to_string(i) + "," + std::to_string(s) +
                               "]: window [" + std::to_string(a) + "," + std::to_string(a + k) +
                               "] escapes [1," + std::to_string(n) + "]");
    }
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(k));
    for (int x = a; x <= a + k; ++x) {
        if (x != a + k - i) e.push_back(x);
    }
    return Column(std::move(e));
}

/// True iff the column reads [a, a+k] minus one interior element.
inline bool is_fundamental(const Column& c) {
    if (c.empty()) return false;
    const int k = c.size();
    return c.back() - c.front() == k && !c.is_consecutive();
}

/// A dominant monomial: multiset of Y_{i,s} factors with positive
/// multiplicities, in context (k, n). Immutable-by-convention value type.
class DominantMonomial {
public:
    DominantMonomial(int k, int n) : k_(k), n_(n) {}

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] bool empty() const { return factors_.empty(); }
    [[nodiscard]] const std::map<YVariable, int>& factors() const { return factors_; }

    [[nodiscard]] int degree() const {
        int d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    /// Validates the variable against the context before inserting.
    void multiply(YVariable v, int exponent = 1) {
        if (exponent <= 0) throw DomainError("exponent must be positive");
        fundamental_column(v.i, v.s, k_, n_); // context check
        factors_[v] += exponent;
    }

    DominantMonomial& operator*=(const DominantMonomial& other) {
        if (other.k_ != k_ || other.n_ != n_) {
            throw SizeMismatchError("monomials live in different contexts");
        }
        for (const auto& [v, e] : other.factors_) factors_[v] += e;
        return *this;
    }

    friend bool operator==(const DominantMonomial& x, const DominantMonomial& y) {
        return x.k_ == y.k_ && x.n_ == y.n_ && x.factors_ == y.factors_;
    }

private:
    int k_;
    int n_;
    std::map<YVariable, int> factors_;
};

/// Monomial of the class of T, read off the reduced representative: each
/// column {b_1 < ... < b_k} contributes Y_{i, i-2a} for every missing value
/// g strictly between b_1 and b_k, where i counts the entries above g and
/// a = g - (k - i). Trivial columns contribute nothing.
inline DominantMonomial tableau_to_monomial(const Tableau& t) {
    DominantMonomial m(t.k(), t.n());
    const Tableau r = reduce(t);
    const int k = t.k();
    for (const Column& c : r.columns()) {
        for (int g = c.front() + 1; g < c.back(); ++g) {
            if (c.contains(g)) continue;
            const int i = static_cast<int>(c.end() - std::upper_bound(c.begin(), c.end(), g));
            const int a = g - (k - i);
            m.multiply({i, i - 2 * a});
        }
    }
    return m;
}

/// The reduced class representative of the union of the fundamental columns
/// of M.
inline Tableau monomial_to_tableau(const DominantMonomial& m) {
    std::vector<Column> cols;
    for (const auto& [v, e] : m.factors()) {
        const Column c = fundamental_column(v.i, v.s, m.k(), m.n());
        for (int r = 0; r < e; ++r) cols.push_back(c);
    }
    return reduce(Tableau::from_columns(m.k(), m.n(), std::move(cols)));
}

/// The unique small-gap representative of the class of T: the union of the
/// fundamental columns of its monomial (not reduced afterwards).
inline Tableau small_gap_form(const Tableau& t) {
    const DominantMonomial m = tableau_to_monomial(t);
    std::vector<Column> cols;
    for (const auto& [v, e] : m.factors()) {
        const Column c = fundamental_column(v.i, v.s, m.k(), m.n());
        for (int r = 0; r < e; ++r) cols.push_back(c);
    }
    return Tableau::from_columns(t.k(), t.n(), std::move(cols));
}

// ---------------------------------------------------------------------------
// Text format: `Y[2,0]*Y[1,-3]^2`; the parser accepts exponents expanded or
// written ^e, output is canonical (i ascending, s descending, ^e for e >= 2).
// ---------------------------------------------------------------------------

inline DominantMonomial parse_monomial(std::string_view text, int k, int n) {
    DominantMonomial m(k, n);
    std::size_t p = 0;
    detail::skip_ws(text, p);
    if (p == text.size() || text.substr(p) == "1") return m; // empty monomial
    while (true) {
        detail::skip_ws(text, p);
        if (p >= text.size() || text[p] != 'Y') {
            throw ParseError("expected 'Y' at position " + std::to_string(p) + " in '" +
                             std::string(text) + "'");
        }
        ++p;
        detail::expect(text, p, '[');
        const int i = detail::parse_int(text, p);
        detail::expect(text, p, ',');
        const int s = detail::parse_int(text, p);
        detail::expect(text, p, ']');
        int e = 1;
        detail::skip_ws(text, p);
        if (p < text.size() && text[p] == '^') {
            ++p;
            e = detail::parse_int(text, p);
            if (e <= 0) throw ParseError("exponent must be positive");
        }
        m.multiply({i, s}, e);
        detail::skip_ws(text, p);
        if (p == text.size()) break;
        detail::expect(text, p, '*');
    }
    return m;
}

inline std::string to_text(const DominantMonomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += '*';
        out += "Y[" + std::to_string(v.i) + "," + std::to_string(v.s) + "]";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace tabprime
