#pragma once

#include <ncsf/partitions.hpp>
#include <ncsf/word.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncsf {

// A filling of cells in the positive quadrant, matrix orientation, 1-based
// (row, column) indexing; 0 marks an absent cell.  Serves SSYT/SYT/RSST of
// partition shapes as well as fillings of column diagrams alpha'.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) { trim(); }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    size_t row_count() const { return rows_.size(); }

    int at(size_t r, size_t c) const // 1-based; 0 if absent
    {
        if (r < 1 || r > rows_.size()) return 0;
        const auto& row = rows_[r - 1];
        if (c < 1 || c > row.size()) return 0;
        return row[c - 1];
    }
    bool has_cell(size_t r, size_t c) const { return at(r, c) != 0; }

    size_t col_count() const
    {
        size_t m = 0;
        for (auto& r : rows_) m = std::max(m, r.size());
        return m;
    }

    int cell_count() const
    {
        int n = 0;
        for (auto& r : rows_)
            for (int x : r)
                if (x) n++;
        return n;
    }

    std::vector<uint8_t> content() const
    {
        std::vector<uint8_t> c;
        for (auto& r : rows_)
            for (int x : r)
                if (x) c.push_back(static_cast<uint8_t>(x));
        std::sort(c.begin(), c.end());
        return c;
    }

    Partition shape() const // valid for partition-shaped fillings
    {
        std::vector<int> p;
        for (auto& r : rows_) {
            int len = 0;
            for (int x : r)
                if (x) len++;
            if (len) p.push_back(len);
        }
        return Partition(std::move(p));
    }

    // Rows joined by "/", entries comma-separated, "." for absent cells.
    std::string str() const
    {
        std::string s;
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (r) s += "/";
            for (size_t c = 0; c < rows_[r].size(); ++c) {
                if (c) s += ",";
                s += rows_[r][c] ? std::to_string(rows_[r][c]) : ".";
            }
        }
        return s;
    }
    static Tableau parse(const std::string& s)
    {
        std::vector<std::vector<int>> rows;
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t e = s.find('/', pos);
            if (e == std::string::npos) e = s.size();
            std::string rowtext = s.substr(pos, e - pos);
            std::vector<int> row;
            size_t p2 = 0;
            while (p2 <= rowtext.size() && !rowtext.empty()) {
                size_t e2 = rowtext.find(',', p2);
                if (e2 == std::string::npos) e2 = rowtext.size();
                std::string cell = rowtext.substr(p2, e2 - p2);
                row.push_back(cell == "." || cell.empty() ? 0 : std::stoi(cell));
                if (e2 == rowtext.size()) break;
                p2 = e2 + 1;
            }
            rows.push_back(std::move(row));
            if (e == s.size()) break;
            pos = e + 1;
        }
        return Tableau(std::move(rows));
    }

    Word row_word() const // rows left-to-right, top to bottom
    {
        std::vector<uint8_t> v;
        for (auto& r : rows_)
            for (int x : r)
                if (x) v.push_back(static_cast<uint8_t>(x));
        return Word(std::move(v));
    }

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
    friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows_ < b.rows_; }

private:
    void trim()
    {
        while (!rows_.empty()) {
            bool empty = true;
            for (int x : rows_.back())
                if (x) empty = false;
            if (!empty) break;
            rows_.pop_back();
        }
    }
    std::vector<std::vector<int>> rows_;
};

// Columns bottom-to-top, leftmost column first.
inline Word colword(const Tableau& t)
{
    std::vector<uint8_t> v;
    size_t cols = t.col_count(), rows = t.row_count();
    for (size_t c = 1; c <= cols; ++c)
        for (size_t r = rows; r >= 1; --r) {
            int x = t.at(r, c);
            if (x) v.push_back(static_cast<uint8_t>(x));
        }
    return Word(std::move(v));
}

namespace detail {
// Diagonals indexed by c-r, southwest first; each read toward the southeast.
inline std::vector<std::vector<int>> diagonals(const Tableau& t)
{
    std::vector<std::vector<int>> out;
    int rows = static_cast<int>(t.row_count());
    int cols = static_cast<int>(t.col_count());
    for (int d = 1 - rows; d <= cols - 1; ++d) {
        std::vector<int> diag;
        for (int r = 1; r <= rows; ++r) {
            int c = r + d;
            if (c < 1 || c > cols) continue;
            int x = t.at(r, c);
            if (x) diag.push_back(x);
        }
        if (!diag.empty()) out.push_back(std::move(diag));
    }
    return out;
}
} // namespace detail

inline Word diagread(const Tableau& t)
{
    std::vector<uint8_t> v;
    for (auto& d : detail::diagonals(t))
        for (int x : d) v.push_back(static_cast<uint8_t>(x));
    return Word(std::move(v));
}

// diagread(w;T): insert w after the first diagonal; when columns 1 and 2 of
// the diagram are both empty, prepend w instead.
inline Word diagread_with(const Word& w, const Tableau& t)
{
    bool first_two_cols_empty = true;
    for (size_t r = 1; r <= t.row_count(); ++r)
        if (t.has_cell(r, 1) || t.has_cell(r, 2)) first_two_cols_empty = false;
    if (w.empty()) return diagread(t);
    if (first_two_cols_empty) return w * diagread(t);
    auto diags = detail::diagonals(t);
    std::vector<uint8_t> v;
    for (size_t i = 0; i < diags.size(); ++i) {
        for (int x : diags[i]) v.push_back(static_cast<uint8_t>(x));
        if (i == 0)
            for (uint8_t x : w.letters()) v.push_back(x);
    }
    if (diags.empty())
        for (uint8_t x : w.letters()) v.push_back(x);
    return Word(std::move(v));
}

// Circled-diagonal reading of an RSST: an entry is circled when its west
// neighbor is exactly one less; each diagonal contributes circled entries
// northwest-bound, then uncircled entries southeast-bound.
inline Word sqread(const Tableau& t)
{
    std::vector<uint8_t> v;
    int rows = static_cast<int>(t.row_count());
    int cols = static_cast<int>(t.col_count());
    for (int d = 1 - rows; d <= cols - 1; ++d) {
        std::vector<int> circled, uncircled;
        for (int r = 1; r <= rows; ++r) {
            int c = r + d;
            if (c < 1 || c > cols) continue;
            int x = t.at(r, c);
            if (!x) continue;
            int west = t.at(r, c - 1);
            if (west && west == x - 1) circled.push_back(x);
            else uncircled.push_back(x);
        }
        for (auto it = circled.rbegin(); it != circled.rend(); ++it)
            v.push_back(static_cast<uint8_t>(*it));
        for (int x : uncircled) v.push_back(static_cast<uint8_t>(x));
    }
    return Word(std::move(v));
}

namespace detail {
template <class Check>
std::vector<Tableau> fill_shape(const Partition& shape, int N, Check&& admissible)
{
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows;
    for (size_t r = 0; r < shape.rows(); ++r) rows.emplace_back(shape.part(r), 0);
    auto rec = [&](auto&& self, size_t r, size_t c) -> void {
        if (r == rows.size()) {
            out.push_back(Tableau(rows));
            return;
        }
        size_t nr = r, nc = c + 1;
        if (nc >= rows[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        for (int x = 1; x <= N; ++x) {
            rows[r][c] = x;
            if (admissible(rows, r, c)) self(self, nr, nc);
        }
        rows[r][c] = 0;
    };
    if (shape.empty()) out.push_back(Tableau());
    else rec(rec, 0, 0);
    return out;
}
} // namespace detail

// Rows weakly increase, columns strictly increase.
inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, int N)
{
    return detail::fill_shape(shape, N, [](const auto& rows, size_t r, size_t c) {
        int x = rows[r][c];
        if (c > 0 && rows[r][c - 1] > x) return false;
        if (r > 0 && rows[r - 1][c] >= x) return false;
        return true;
    });
}

inline std::vector<Tableau> enumerate_syt(const Partition& shape)
{
    int n = shape.size();
    auto all = detail::fill_shape(shape, n, [](const auto& rows, size_t r, size_t c) {
        int x = rows[r][c];
        if (c > 0 && rows[r][c - 1] >= x) return false;
        if (r > 0 && rows[r - 1][c] >= x) return false;
        // each value used at most once
        int uses = 0;
        for (auto& row : rows)
            for (int y : row)
                if (y == x) uses++;
        return uses == 1;
    });
    return all;
}

// Rows and columns strictly increase; diagonal neighbors differ by >= 3.
inline std::vector<Tableau> enumerate_rsst(const Partition& shape, int N)
{
    return detail::fill_shape(shape, N, [](const auto& rows, size_t r, size_t c) {
        int x = rows[r][c];
        if (c > 0 && rows[r][c - 1] >= x) return false;
        if (r > 0 && rows[r - 1][c] >= x) return false;
        if (r > 0 && c > 0 && rows[r - 1][c - 1] > x - 3) return false;
        return true;
    });
}

// Fillings of the column diagram alpha' obeying the flag tuple n:
// rows weakly increase over present cells, columns strictly increase,
// column j entries lie in [n_j], and a column taller than its left
// neighbor has its bottom entry > n_{j-1}.  A flag comparison against an
// empty column is vacuous.
inline std::vector<Tableau> enumerate_flagged(const std::vector<int>& alpha,
                                              const std::vector<int>& flags)
{
    if (alpha.size() != flags.size())
        throw std::invalid_argument("alpha and flag tuple lengths differ");
    int l = static_cast<int>(alpha.size());
    for (int j = 0; j + 1 < l; ++j)
        if (alpha[j + 1] > alpha[j] + 1)
            throw std::invalid_argument("alpha_{j+1} <= alpha_j + 1 required");
    int max_rows = 0;
    for (int a : alpha) max_rows = std::max(max_rows, a);
    std::vector<std::vector<int>> rows(max_rows, std::vector<int>(l, 0));
    std::vector<Tableau> out;
    // fill column by column, top to bottom inside a column
    auto rec = [&](auto&& self, int j, int r) -> void {
        if (j == l) {
            out.push_back(Tableau(rows));
            return;
        }
        if (r >= alpha[j]) {
            self(self, j + 1, 0);
            return;
        }
        int lo = 1, hi = flags[j];
        if (r > 0) lo = std::max(lo, rows[r - 1][j] + 1);
        // weak row increase against the nearest present cell to the left
        for (int jj = j - 1; jj >= 0; --jj) {
            if (alpha[jj] > r) {
                lo = std::max(lo, rows[r][jj]);
                break;
            }
        }
        // bottom cell of a column taller than its left neighbor
        if (j > 0 && alpha[j - 1] < alpha[j] && r == alpha[j] - 1)
            lo = std::max(lo, flags[j - 1] + 1);
        for (int x = lo; x <= hi; ++x) {
            rows[r][j] = x;
            self(self, j, r + 1);
            rows[r][j] = 0;
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(),
              [](const Tableau& a, const Tableau& b) { return a.row_word() < b.row_word(); });
    return out;
}

// Schensted row insertion; words in one Knuth class share the result.
inline Tableau knuth_insert(const Word& w)
{
    std::vector<std::vector<int>> rows;
    for (uint8_t letter : w.letters()) {
        int x = letter;
        for (size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({x});
                break;
            }
            auto& row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(*it, x);
        }
    }
    return Tableau(std::move(rows));
}

// All arrangements of the content multiset whose insertion tableau is T.
inline std::vector<Word> plactic_class(const Tableau& t)
{
    std::vector<uint8_t> content = t.content();
    std::sort(content.begin(), content.end());
    std::vector<Word> out;
    do {
        Word w{std::vector<uint8_t>(content)};
        if (knuth_insert(w) == t) out.push_back(w);
    } while (std::next_permutation(content.begin(), content.end()));
    return out;
}

} // namespace ncsf
