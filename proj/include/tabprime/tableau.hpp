#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tabprime/errors.hpp"

namespace tabprime {

/// A one-column tableau: strictly increasing entries, usually drawn from
/// [1, n]. Doubles as a Pluecker coordinate index.
class Column {
public:
    Column() = default;

    /// Entries may arrive in any order; they are sorted. Repeated entries
    /// are rejected (a column is strictly increasing).
    explicit Column(std::vector<int> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end());
        for (std::size_t i = 1; i < entries_.size(); ++i) {
            if (entries_[i - 1] == entries_[i]) {
                throw NotSemistandardError("repeated entry " + std::to_string(entries_[i]) +
                                           " in column");
            }
        }
    }

    Column(std::initializer_list<int> entries) : Column(std::vector<int>(entries)) {}

    [[nodiscard]] int size() const { return static_cast<int>(entries_.size()); }
    [[nodiscard]] bool empty() const { return entries_.empty(); }
    [[nodiscard]] int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] int front() const { return entries_.front(); }
    [[nodiscard]] int back() const { return entries_.back(); }
    [[nodiscard]] const std::vector<int>& entries() const { return entries_; }

    [[nodiscard]] auto begin() const { return entries_.begin(); }
    [[nodiscard]] auto end() const { return entries_.end(); }

    [[nodiscard]] bool contains(int v) const {
        return std::binary_search(entries_.begin(), entries_.end(), v);
    }

    /// True iff the entries are the consecutive run [a, a+k-1]. Such columns
    /// are the trivial (frozen) factors.
    [[nodiscard]] bool is_consecutive() const {
        if (entries_.empty()) return true;
        return entries_.back() - entries_.front() + 1 == size();
    }

    void check_context(int k, int n) const {
        if (size() != k) {
            throw SizeMismatchError("column has " + std::to_string(size()) +
                                    " entries, expected " + std::to_string(k));
        }
        if (!entries_.empty() && (entries_.front() < 1 || entries_.back() > n)) {
            throw EntryOutOfRangeError("column entries escape [1," + std::to_string(n) + "]");
        }
    }

    auto operator<=>(const Column&) const = default;

private:
    std::vector<int> entries_;
};

using Grid = std::vector<std::vector<int>>; // rows, weakly increasing within each row

/// A rectangular semistandard tableau with k rows and entries in [1, n],
/// stored as its canonical column sequence (the grid read off the sorted
/// rows). The empty tableau has m = 0 columns.
///
/// Values are immutable after construction; every operation below is a pure
/// function, so concurrent use is safe.
class Tableau {
public:
    Tableau() = default;
    Tableau(int k, int n) : k_(k), n_(n) { check_shape(); }

    /// Builds the tableau whose rows are the row-wise multiset union of the
    /// given columns. Any multiset of valid columns yields a semistandard
    /// grid, so this doubles as the lenient parser backend: column order and
    /// intra-column order are both irrelevant.
    static Tableau from_columns(int k, int n, std::vector<Column> cols) {
        Tableau t(k, n);
        for (const Column& c : cols) c.check_context(k, n);
        if (cols.empty()) return t;
        Grid rows(static_cast<std::size_t>(k));
        for (const Column& c : cols) {
            for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)].push_back(c[i]);
        }
        for (auto& row : rows) std::sort(row.begin(), row.end());
        t.cols_ = columns_of_sorted_rows(rows);
        return t;
    }

    /// Builds from an explicit grid of rows; the grid must already be
    /// semistandard. Reports the first offending cell.
    static Tableau from_rows(int k, int n, const Grid& rows) {
        Tableau t(k, n);
        if (rows.size() != static_cast<std::size_t>(k)) {
            throw SizeMismatchError("grid has " + std::to_string(rows.size()) +
                                    " rows, expected " + std::to_string(k));
        }
        if (k == 0 || rows[0].empty()) {
            for (const auto& row : rows) {
                if (!row.empty()) throw NotSemistandardError("ragged grid");
            }
            return t;
        }
        const std::size_t m = rows[0].size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m) throw NotSemistandardError("ragged grid");
            for (std::size_t a = 0; a < m; ++a) {
                const int v = rows[i][a];
                if (v < 1 || v > n) {
                    throw EntryOutOfRangeError("entry " + std::to_string(v) + " at row " +
                                               std::to_string(i + 1) + ", column " +
                                               std::to_string(a + 1) + " escapes [1," +
                                               std::to_string(n) + "]");
                }
                if (a > 0 && rows[i][a - 1] > v) {
                    throw NotSemistandardError("row " + std::to_string(i + 1) +
                                               " decreases at column " + std::to_string(a + 1));
                }
                if (i > 0 && rows[i - 1][a] >= v) {
                    throw NotSemistandardError("column " + std::to_string(a + 1) +
                                               " fails to increase at row " + std::to_string(i + 1));
                }
            }
        }
        t.cols_ = columns_of_sorted_rows(rows);
        return t;
    }

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int m() const { return static_cast<int>(cols_.size()); }
    [[nodiscard]] bool empty() const { return cols_.empty(); }
    [[nodiscard]] const std::vector<Column>& columns() const { return cols_; }
    [[nodiscard]] const Column& column(int a) const { return cols_[static_cast<std::size_t>(a)]; }

    [[nodiscard]] std::vector<int> row(int i) const {
        std::vector<int> out;
        out.reserve(cols_.size());
        for (const Column& c : cols_) out.push_back(c[i]);
        return out;
    }

    [[nodiscard]] Grid rows() const {
        Grid out(static_cast<std::size_t>(k_));
        for (int i = 0; i < k_; ++i) out[static_cast<std::size_t>(i)] = row(i);
        return out;
    }

    auto operator<=>(const Tableau&) const = default;

private:
    void check_shape() const {
        if (k_ < 0 || n_ < 0 || (k_ > 0 && n_ < k_)) {
            throw DomainError("invalid shape k=" + std::to_string(k_) +
                              ", n=" + std::to_string(n_));
        }
    }

    static std::vector<Column> columns_of_sorted_rows(const Grid& rows) {
        const std::size_t k = rows.size();
        const std::size_t m = rows[0].size();
        std::vector<Column> cols;
        cols.reserve(m);
        for (std::size_t a = 0; a < m; ++a) {
            std::vector<int> e(k);
            for (std::size_t i = 0; i < k; ++i) e[i] = rows[i][a];
            // Column's constructor re-checks strictness and rejects repeats.
            cols.emplace_back(std::move(e));
        }
        return cols;
    }

    int k_ = 0;
    int n_ = 0;
    std::vector<Column> cols_;
};

inline void check_same_context(const Tableau& s, const Tableau& t) {
    if (s.k() != t.k() || s.n() != t.n()) {
        throw SizeMismatchError("tableaux live in different contexts");
    }
}

/// Row-wise multiset union; the monoid operation. The identity element is
/// the empty tableau.
inline Tableau tableau_union(const Tableau& s, const Tableau& t) {
    check_same_context(s, t);
    std::vector<Column> cols = s.columns();
    cols.insert(cols.end(), t.columns().begin(), t.columns().end());
    return Tableau::from_columns(s.k(), s.n(), std::move(cols));
}

/// True iff every row of s is contained in the corresponding row of t as a
/// multiset.
inline bool is_factor(const Tableau& s, const Tableau& t) {
    check_same_context(s, t);
    if (s.empty()) return true;
    if (s.m() > t.m()) return false;
    for (int i = 0; i < s.k(); ++i) {
        const auto rs = s.row(i);
        const auto rt = t.row(i);
        // Both rows are sorted; multiset inclusion by merge walk.
        std::size_t p = 0;
        for (int v : rs) {
            while (p < rt.size() && rt[p] < v) ++p;
            if (p == rt.size() || rt[p] != v) return false;
            ++p;
        }
    }
    return true;
}

/// Row-wise multiset difference t minus s, rows kept sorted. The result is
/// row-increasing but need not be semistandard, so a raw grid is returned;
/// callers re-validate with Tableau::from_rows when they need a tableau.
inline Grid quotient(const Tableau& t, const Tableau& s) {
    if (!is_factor(s, t)) throw NotAFactorError("quotient: not a factor");
    Grid out(static_cast<std::size_t>(t.k()));
    for (int i = 0; i < t.k(); ++i) {
        const auto rt = t.row(i);
        const auto rs = s.row(i);
        auto& row = out[static_cast<std::size_t>(i)];
        std::size_t p = 0;
        for (int v : rt) {
            if (p < rs.size() && rs[p] == v) {
                ++p;
            } else {
                row.push_back(v);
            }
        }
    }
    return out;
}

/// A tableau is trivial when every column is a consecutive run; trivial
/// columns act as frozen/unit factors.
inline bool is_trivial(const Tableau& t) {
    return std::all_of(t.columns().begin(), t.columns().end(),
                       [](const Column& c) { return c.is_consecutive(); });
}

inline Column consecutive_column(int a, int k) {
    std::vector<int> e(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = a + i;
    return Column(std::move(e));
}

/// Removes consecutive-run columns that are factors until none remain. The
/// removal order does not matter (tested confluence property); scanning the
/// start positions once suffices because removals never create new factors,
/// but the loop runs to a fixpoint anyway.
inline Tableau reduce(const Tableau& t) {
    if (t.empty()) return t;
    const int k = t.k();
    Tableau cur = t;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 1; a + k - 1 <= t.n(); ++a) {
            const Tableau triv = Tableau::from_columns(k, t.n(), {consecutive_column(a, k)});
            while (!cur.empty() && is_factor(triv, cur)) {
                cur = Tableau::from_rows(k, t.n(), quotient(cur, triv));
                changed = true;
            }
        }
    }
    return cur;
}

inline bool equivalent(const Tableau& s, const Tableau& t) {
    check_same_context(s, t);
    return reduce(s) == reduce(t);
}

// ---------------------------------------------------------------------------
// Text format: `[[1,2,4,6],[3,5,7,8]]`, outer sequence = columns, each inner
// sequence one column. The parser accepts arbitrary column order (and order
// within a column) and canonicalizes.
// ---------------------------------------------------------------------------

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& p) {
    while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
}

inline int parse_int(std::string_view s, std::size_t& p) {
    skip_ws(s, p);
    std::size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
    if (p == start || (p == start + 1 && !(s[start] >= '0' && s[start] <= '9'))) {
        throw ParseError("expected integer at position " + std::to_string(start) + " in '" +
                         std::string(s) + "'");
    }
    return std::stoi(std::string(s.substr(start, p - start)));
}

inline void expect(std::string_view s, std::size_t& p, char c) {
    skip_ws(s, p);
    if (p >= s.size() || s[p] != c) {
        throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(p) +
                         " in '" + std::string(s) + "'");
    }
    ++p;
}

inline std::vector<int> parse_int_list(std::string_view s, std::size_t& p) {
    std::vector<int> out;
    expect(s, p, '[');
    skip_ws(s, p);
    if (p < s.size() && s[p] == ']') {
        ++p;
        return out;
    }
    while (true) {
        out.push_back(parse_int(s, p));
        skip_ws(s, p);
        if (p < s.size() && s[p] == ',') {
            ++p;
            continue;
        }
        expect(s, p, ']');
        return out;
    }
}

} // namespace detail

inline Column parse_column(std::string_view text) {
    std::size_t p = 0;
    auto entries = detail::parse_int_list(text, p);
    detail::skip_ws(text, p);
    if (p != text.size()) throw ParseError("trailing input after column in '" + std::string(text) + "'");
    return Column(std::move(entries));
}

inline Tableau parse_tableau(std::string_view text, int k, int n) {
    std::size_t p = 0;
    detail::expect(text, p, '[');
    detail::skip_ws(text, p);
    std::vector<Column> cols;
    if (p < text.size() && text[p] == ']') {
        ++p;
    } else {
        while (true) {
            cols.emplace_back(detail::parse_int_list(text, p));
            detail::skip_ws(text, p);
            if (p < text.size() && text[p] == ',') {
                ++p;
                continue;
            }
            detail::expect(text, p, ']');
            break;
        }
    }
    detail::skip_ws(text, p);
    if (p != text.size()) throw ParseError("trailing input after tableau in '" + std::string(text) + "'");
    return Tableau::from_columns(k, n, std::move(cols));
}

inline std::string to_text(const Column& c) {
    std::string out = "[";
    for (int i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out + "]";
}

inline std::string to_text(const Tableau& t) {
    std::string out = "[";
    for (int a = 0; a < t.m(); ++a) {
        if (a) out += ',';
        out += to_text(t.column(a));
    }
    return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Column& c) { return os << to_text(c); }
inline std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << to_text(t); }

} // namespace tabprime
