#pragma once

#include <ncsf/qpoly.hpp>
#include <ncsf/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace ncsf {

// Sparse row over the field K: entries sorted by column, no zeros stored.
template <class K>
struct SparseVec {
    std::vector<std::pair<uint32_t, K>> e;

    bool empty() const { return e.empty(); }
    uint32_t lead() const { return e.front().first; }
    const K& lead_coeff() const { return e.front().second; }

    void sort_and_compress()
    {
        std::sort(e.begin(), e.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<uint32_t, K>> out;
        out.reserve(e.size());
        for (auto& [c, v] : e) {
            if (!out.empty() && out.back().first == c) out.back().second += v;
            else out.emplace_back(c, v);
        }
        e.clear();
        for (auto& [c, v] : out)
            if (!is_zero(v)) e.emplace_back(c, v);
    }

    void scale(const K& f)
    {
        for (auto& [c, v] : e) v *= f;
    }

    // *this -= f * other (merge of sorted supports)
    void axpy(const K& f, const SparseVec& other)
    {
        std::vector<std::pair<uint32_t, K>> out;
        out.reserve(e.size() + other.e.size());
        size_t i = 0, j = 0;
        while (i < e.size() || j < other.e.size()) {
            if (j == other.e.size() || (i < e.size() && e[i].first < other.e[j].first)) {
                out.push_back(e[i++]);
            } else if (i == e.size() || other.e[j].first < e[i].first) {
                out.emplace_back(other.e[j].first, -(f * other.e[j].second));
                ++j;
            } else {
                K v = e[i].second - f * other.e[j].second;
                if (!is_zero(v)) out.emplace_back(e[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        e = std::move(out);
    }
};

// Row echelon span with pivot = least column in the canonical order.
// Installed rows are never rewritten on insert; full inter-reduction is done
// lazily when a reduced form is required (nullspace extraction).
template <class K>
class Echelon {
public:
    // Returns true when the row enlarged the span.
    bool insert(SparseVec<K> r)
    {
        reduce_leading(r);
        if (r.empty()) return false;
        K inv = K(1) / r.lead_coeff();
        r.scale(inv);
        uint32_t p = r.lead();
        rows_.emplace(p, std::move(r));
        reduced_ = false;
        return true;
    }

    size_t rank() const { return rows_.size(); }
    bool is_pivot(uint32_t col) const { return rows_.count(col) != 0; }
    const std::map<uint32_t, SparseVec<K>>& rows() const { return rows_; }

    // Normal form: eliminate every pivot column from f.  A single sweep in
    // column order terminates because row supports start at their pivot.
    void reduce(SparseVec<K>& f) const
    {
        std::map<uint32_t, K> work;
        for (auto& [c, v] : f.e) work[c] = v;
        std::vector<std::pair<uint32_t, K>> out;
        while (!work.empty()) {
            auto it = work.begin();
            uint32_t col = it->first;
            K coef = it->second;
            work.erase(it);
            if (is_zero(coef)) continue;
            auto rit = rows_.find(col);
            if (rit == rows_.end()) {
                out.emplace_back(col, std::move(coef));
                continue;
            }
            const auto& row = rit->second;
            for (size_t i = 1; i < row.e.size(); ++i) work[row.e[i].first] -= coef * row.e[i].second;
        }
        f.e = std::move(out);
    }

    bool reduces_to_zero(SparseVec<K> f) const
    {
        reduce_leading(f);
        return f.empty();
    }

    // Reduced row echelon form: eliminate pivot columns from row tails.
    void make_reduced()
    {
        if (reduced_) return;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            SparseVec<K>& row = it->second;
            SparseVec<K> tail;
            tail.e.assign(row.e.begin() + 1, row.e.end());
            reduce(tail);
            row.e.resize(1);
            row.e.insert(row.e.end(), tail.e.begin(), tail.e.end());
        }
        reduced_ = true;
    }

    // Basis of { x : row . x = 0 for all rows }, one vector per non-pivot
    // column, over columns 0..ncols-1.  Requires reduced form.
    std::vector<SparseVec<K>> nullspace(uint32_t ncols)
    {
        make_reduced();
        std::vector<SparseVec<K>> out;
        for (uint32_t c = 0; c < ncols; ++c) {
            if (is_pivot(c)) continue;
            SparseVec<K> v;
            v.e.emplace_back(c, K(1));
            for (auto& [p, row] : rows_) {
                K coef(0);
                for (auto& [col, val] : row.e)
                    if (col == c) coef = val;
                if (!is_zero(coef)) v.e.emplace_back(p, -coef);
            }
            v.sort_and_compress();
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    void reduce_leading(SparseVec<K>& r) const
    {
        while (!r.empty()) {
            auto it = rows_.find(r.lead());
            if (it == rows_.end()) return;
            K f = r.lead_coeff();
            r.axpy(f, it->second);
        }
    }

    std::map<uint32_t, SparseVec<K>> rows_;
    bool reduced_ = true;
};

template <class K>
K dot(const SparseVec<K>& a, const SparseVec<K>& b)
{
    K acc(0);
    size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first < b.e[j].first) ++i;
        else if (b.e[j].first < a.e[i].first) ++j;
        else acc += a.e[i++].second * b.e[j++].second;
    }
    return acc;
}

} // namespace ncsf
