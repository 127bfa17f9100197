#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "tabprime/correspondence.hpp"
#include "tabprime/errors.hpp"
#include "tabprime/tableau.hpp"

namespace tabprime {

/// Element of the symmetric group S_m in one-line notation (1-based
/// values); the Coxeter length is cached at construction.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
        std::vector<bool> seen(word_.size(), false);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v - 1)]) {
                throw DomainError("invalid one-line permutation");
            }
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
        length_ = inversions();
    }

    static Permutation identity(int m) {
        std::vector<int> w(static_cast<std::size_t>(m));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    /// The longest element w0 = (m, m-1, ..., 1).
    static Permutation longest(int m) {
        std::vector<int> w(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = m - i;
        return Permutation(std::move(w));
    }

    [[nodiscard]] int size() const { return static_cast<int>(word_.size()); }
    [[nodiscard]] int length() const { return length_; }
    [[nodiscard]] const std::vector<int>& word() const { return word_; }
    [[nodiscard]] int operator()(int x) const { return word_[static_cast<std::size_t>(x - 1)]; }

    /// Function composition: (u.compose(v))(x) = u(v(x)).
    [[nodiscard]] Permutation compose(const Permutation& v) const {
        std::vector<int> w(word_.size());
        for (std::size_t x = 0; x < word_.size(); ++x) {
            w[x] = word_[static_cast<std::size_t>(v.word_[x] - 1)];
        }
        return Permutation(std::move(w));
    }

    /// Right multiplication by the simple transposition s_i (swaps the
    /// entries at positions i, i+1; 1-based).
    [[nodiscard]] Permutation swap_positions(int i) const {
        std::vector<int> w = word_;
        std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
        return Permutation(std::move(w));
    }

    /// Smallest right descent position, or 0 when none (identity).
    [[nodiscard]] int first_right_descent() const {
        for (int i = 1; i < size(); ++i) {
            if ((*this)(i) > (*this)(i + 1)) return i;
        }
        return 0;
    }

    /// Bruhat order via the sorted-prefix dominance criterion.
    [[nodiscard]] bool bruhat_leq(const Permutation& v) const {
        if (size() != v.size()) throw SizeMismatchError("bruhat_leq: different ranks");
        std::vector<int> a, b;
        a.reserve(word_.size());
        b.reserve(word_.size());
        for (int p = 0; p + 1 < size(); ++p) {
            a.insert(std::upper_bound(a.begin(), a.end(), word_[static_cast<std::size_t>(p)]),
                     word_[static_cast<std::size_t>(p)]);
            b.insert(std::upper_bound(b.begin(), b.end(), v.word_[static_cast<std::size_t>(p)]),
                     v.word_[static_cast<std::size_t>(p)]);
            for (std::size_t q = 0; q < a.size(); ++q) {
                if (a[q] > b[q]) return false;
            }
        }
        return true;
    }

    auto operator<=>(const Permutation& other) const { return word_ <=> other.word_; }
    bool operator==(const Permutation& other) const { return word_ == other.word_; }

private:
    [[nodiscard]] int inversions() const {
        int inv = 0;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            for (std::size_t j = i + 1; j < word_.size(); ++j) {
                if (word_[i] > word_[j]) ++inv;
            }
        }
        return inv;
    }

    std::vector<int> word_;
    int length_ = 0;
};

inline std::vector<Permutation> all_permutations(int m) {
    std::vector<int> w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Integer polynomial in q, coefficients ascending, trailing zeros trimmed.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static QPolynomial one() { return QPolynomial({1}); }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] long long coeff(int d) const {
        return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(d)] : 0;
    }
    [[nodiscard]] const std::vector<long long>& coeffs() const { return coeffs_; }

    [[nodiscard]] long long at_one() const {
        long long s = 0;
        for (long long c : coeffs_) s += c;
        return s;
    }

    [[nodiscard]] QPolynomial shifted(int d) const {
        if (is_zero()) return {};
        std::vector<long long> c(static_cast<std::size_t>(d), 0);
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return QPolynomial(std::move(c));
    }

    [[nodiscard]] QPolynomial scaled(long long f) const {
        std::vector<long long> c = coeffs_;
        for (long long& x : c) x *= f;
        return QPolynomial(std::move(c));
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    QPolynomial& operator-=(const QPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    [[nodiscard]] std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = 0; d <= degree(); ++d) {
            const long long c = coeff(d);
            if (c == 0) continue;
            if (!out.empty()) out += c > 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            const long long a = c > 0 ? c : -c;
            if (d == 0) {
                out += std::to_string(a);
            } else {
                if (a != 1) out += std::to_string(a) + "*";
                out += d == 1 ? "q" : "q^" + std::to_string(d);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<long long> coeffs_;
};

namespace detail {

struct KLTable {
    std::shared_mutex mutex;
    std::map<std::pair<std::vector<int>, std::vector<int>>, QPolynomial> values;

    static KLTable& instance() {
        static KLTable table;
        return table;
    }
};

} // namespace detail

/// Kazhdan-Lusztig polynomial p_{u,v} by the classical recursion on a right
/// descent of v (the smallest one, for determinism), fully memoized. Zero
/// when u is not below v in Bruhat order; otherwise constant term 1 and
/// degree at most (l(v) - l(u) - 1) / 2.
inline QPolynomial kl_polynomial(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw SizeMismatchError("kl_polynomial: different ranks");
    if (u == v) return QPolynomial::one();
    if (!u.bruhat_leq(v)) return {};

    auto& table = detail::KLTable::instance();
    const auto key = std::make_pair(u.word(), v.word());
    {
        std::shared_lock lock(table.mutex);
        if (auto it = table.values.find(key); it != table.values.end()) return it->second;
    }

    const int si = v.first_right_descent();
    const Permutation vs = v.swap_positions(si);
    const Permutation us = u.swap_positions(si);
    const int c = us.length() < u.length() ? 1 : 0;

    QPolynomial acc = kl_polynomial(us, vs).shifted(1 - c);
    acc += kl_polynomial(u, vs).shifted(c);
    for (const Permutation& z : all_permutations(u.size())) {
        if (z.swap_positions(si).length() >= z.length()) continue;
        if (!u.bruhat_leq(z) || !z.bruhat_leq(vs)) continue;
        const int gap = vs.length() - z.length() - 1;
        if (gap < 0 || gap % 2 != 0) continue;
        const long long mu = kl_polynomial(z, vs).coeff(gap / 2);
        if (mu == 0) continue;
        acc -= kl_polynomial(u, z).scaled(mu).shifted((v.length() - z.length()) / 2);
    }

    {
        std::unique_lock lock(table.mutex);
        table.values.emplace(key, acc);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Standard monomials and ch(T).
// ---------------------------------------------------------------------------

/// Window data of a small-gap tableau: each column is [w, w+k] minus one
/// element r. Fundamental columns determine (w, r) uniquely; consecutive
/// columns carry the gap at a window edge, preferring the left window
/// [a-1, a+k-1] minus {a-1} when it fits inside [1, n].
struct SmallGapData {
    std::vector<int> window_starts;            // weakly increasing
    std::vector<int> gaps;                     // weakly increasing
    std::vector<std::pair<int, int>> per_column; // (w, r) in canonical column order
};

inline SmallGapData small_gap_data(const Tableau& t) {
    const int k = t.k();
    const int n = t.n();
    SmallGapData d;
    for (const Column& c : t.columns()) {
        int w = 0, r = 0;
        if (is_fundamental(c)) {
            w = c.front();
            for (int g = c.front() + 1; g < c.back(); ++g) {
                if (!c.contains(g)) r = g;
            }
        } else if (c.is_consecutive()) {
            if (c.front() - 1 >= 1) {
                w = c.front() - 1;
                r = w;
            } else if (c.front() + k <= n) {
                w = c.front();
                r = w + k;
            } else {
                throw NotSmallGapError("column " + to_text(c) + " admits no window in [1," +
                                       std::to_string(n) + "]");
            }
        } else {
            throw NotSmallGapError("column " + to_text(c) + " is not a window minus one element");
        }
        d.per_column.emplace_back(w, r);
    }
    for (const auto& [w, r] : d.per_column) {
        d.window_starts.push_back(w);
        d.gaps.push_back(r);
    }
    std::sort(d.window_starts.begin(), d.window_starts.end());
    std::sort(d.gaps.begin(), d.gaps.end());
    return d;
}

namespace detail {

inline Column window_column(int w, int g, int k) {
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(k));
    for (int x = w; x <= w + k; ++x) {
        if (x != g) e.push_back(x);
    }
    return Column(std::move(e));
}

// Columns [i_{u(a)}, i_{u(a)}+k] \ {j_a}, or nothing when some j_a falls
// outside its window.
inline bool alpha_columns(const Permutation& u, const SmallGapData& d, int k,
                          std::vector<Column>& out) {
    const int m = u.size();
    out.clear();
    for (int a = 1; a <= m; ++a) {
        const int w = d.window_starts[static_cast<std::size_t>(u(a) - 1)];
        const int g = d.gaps[static_cast<std::size_t>(a - 1)];
        if (g < w || g > w + k) return false;
        out.push_back(window_column(w, g, k));
    }
    std::sort(out.begin(), out.end());
    return true;
}

} // namespace detail

/// The maximal-length permutation whose window columns reproduce T'.
inline Permutation compute_wT(const Tableau& t_prime) {
    const int m = t_prime.m();
    if (m == 0) return Permutation::identity(0);
    if (m > 8) throw GuardError("compute_wT: column bound exceeded");
    const SmallGapData d = small_gap_data(t_prime);
    std::vector<Column> target = t_prime.columns();
    std::sort(target.begin(), target.end());

    std::vector<Permutation> perms = all_permutations(m);
    std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
        return a.length() > b.length();
    });
    std::vector<Column> cols;
    for (const Permutation& u : perms) {
        if (detail::alpha_columns(u, d, t_prime.k(), cols) && cols == target) return u;
    }
    throw InternalInconsistencyError("no permutation reproduces " + to_text(t_prime));
}

/// Integer combination of commutative Pluecker monomials (multisets of
/// columns). Zero coefficients are never stored.
class PlueckerSum {
public:
    using Monomial = std::vector<Column>; // sorted

    PlueckerSum() = default;

    void add(Monomial mono, long long coeff) {
        if (coeff == 0) return;
        std::sort(mono.begin(), mono.end());
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(std::move(mono), coeff);
        } else if ((it->second += coeff) == 0) {
            terms_.erase(it);
        }
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const std::map<Monomial, long long>& terms() const { return terms_; }

    [[nodiscard]] long long coeff(const Monomial& mono) const {
        Monomial m = mono;
        std::sort(m.begin(), m.end());
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Image in the quotient that sets every consecutive-window Pluecker
    /// coordinate to 1: consecutive columns are dropped from each monomial.
    [[nodiscard]] PlueckerSum quotient_normalized() const {
        PlueckerSum out;
        for (const auto& [mono, c] : terms_) {
            Monomial kept;
            for (const Column& col : mono) {
                if (!col.is_consecutive()) kept.push_back(col);
            }
            out.add(std::move(kept), c);
        }
        return out;
    }

    friend bool operator==(const PlueckerSum&, const PlueckerSum&) = default;

    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [mono, c] : terms_) {
            const long long a = c > 0 ? c : -c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c > 0 ? " + " : " - ";
            }
            std::string body;
            if (a != 1 || mono.empty()) body += std::to_string(a);
            for (const Column& col : mono) {
                if (!body.empty()) body += "*";
                body += "P" + to_text(col);
            }
            out += body;
        }
        return out;
    }

private:
    std::map<Monomial, long long> terms_;
};

/// The standard monomial P_{u;T'}: the product of the window columns when
/// every gap lands inside its window, otherwise zero.
inline PlueckerSum standard_monomial(const Permutation& u, const Tableau& t_prime) {
    if (u.size() != t_prime.m()) throw SizeMismatchError("standard_monomial: rank != columns");
    const SmallGapData d = small_gap_data(t_prime);
    PlueckerSum out;
    std::vector<Column> cols;
    if (detail::alpha_columns(u, d, t_prime.k(), cols)) out.add(std::move(cols), 1);
    return out;
}

/// The dual-canonical-basis expansion
///   ch(T) = sum_u (-1)^{l(u w_T)} p_{u w0, w_T w0}(1) P_{u;T'}
/// over the Pluecker coordinates of Gr(k,n), without the frozen-to-1
/// quotient (apply quotient_normalized() for that).
///
/// T' is T itself when T is one-column or when every column carries window
/// data (fundamental or consecutive); otherwise the small-gap form of T.
inline PlueckerSum ch(const Tableau& t, int max_columns = 6) {
    PlueckerSum out;
    if (t.empty()) {
        out.add({}, 1);
        return out;
    }
    if (t.m() == 1) {
        out.add({t.column(0)}, 1);
        return out;
    }
    Tableau t_prime = t;
    SmallGapData data;
    try {
        data = small_gap_data(t_prime);
    } catch (const NotSmallGapError&) {
        t_prime = small_gap_form(t);
        if (t_prime.m() <= 1) {
            if (t_prime.m() == 1) out.add({t_prime.column(0)}, 1);
            else out.add({}, 1);
            return out;
        }
        data = small_gap_data(t_prime);
    }
    const int m = t_prime.m();
    if (m > max_columns) {
        throw GuardError("ch: " + std::to_string(m) + " columns exceed the bound " +
                         std::to_string(max_columns));
    }

    const Permutation w_t = compute_wT(t_prime);
    const Permutation w0 = Permutation::longest(m);
    const Permutation wt_w0 = w_t.compose(w0);
    std::vector<Column> cols;
    for (const Permutation& u : all_permutations(m)) {
        if (!detail::alpha_columns(u, data, t_prime.k(), cols)) continue;
        const long long p = kl_polynomial(u.compose(w0), wt_w0).at_one();
        if (p == 0) continue;
        const int sign = u.compose(w_t).length() % 2 == 0 ? 1 : -1;
        out.add(cols, sign * p);
    }
    return out;
}

} // namespace tabprime
