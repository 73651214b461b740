#pragma once

#include <ncsf/switchboard.hpp>
#include <ncsf/tableau.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncsf {

// One skew shape, placement-sensitive: offset shifts every cell's content
// (horizontal translation).
struct SkewShape {
    Partition outer, inner;
    int offset = 0;

    SkewShape() = default;
    SkewShape(Partition o, Partition i, int off = 0)
        : outer(std::move(o)), inner(std::move(i)), offset(off)
    {
        for (size_t r = 0; r < outer.rows(); ++r)
            if (inner.part(r) > outer.part(r))
                throw std::invalid_argument("inner shape not contained in outer");
        if (inner.rows() > outer.rows()) throw std::invalid_argument("inner taller than outer");
    }

    int cell_count() const { return outer.size() - inner.size(); }

    // (row, col, content) triples of the skew cells, row-major, 1-based.
    std::vector<std::array<int, 3>> cells() const
    {
        std::vector<std::array<int, 3>> out;
        for (size_t r = 1; r <= outer.rows(); ++r)
            for (int c = inner.part(r - 1) + 1; c <= outer.part(r - 1); ++c)
                out.push_back({static_cast<int>(r), c, c - static_cast<int>(r) + offset});
        return out;
    }

    std::string str() const
    {
        std::string s = outer.str();
        if (!inner.empty()) s += "/" + inner.str();
        if (offset) s += "@" + std::to_string(offset);
        return s;
    }
};

struct SkewTuple {
    std::vector<SkewShape> shapes;

    int level() const { return static_cast<int>(shapes.size()); }
    int cell_count() const
    {
        int n = 0;
        for (auto& s : shapes) n += s.cell_count();
        return n;
    }

    // Shifted contents c~(z) = c(z) k + r for cells z in component r.
    std::vector<int> shifted_contents() const
    {
        std::vector<int> out;
        int k = level();
        for (int r = 0; r < k; ++r)
            for (auto& [row, col, c] : shapes[r].cells()) out.push_back(c * k + r);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Per-component tables of shifted contents, matching the shape layout;
    // 0 marks inner cells.
    std::vector<Tableau> shifted_content_tables() const
    {
        std::vector<Tableau> out;
        int k = level();
        for (int r = 0; r < k; ++r) {
            std::vector<std::vector<int>> rows;
            for (size_t row = 1; row <= shapes[r].outer.rows(); ++row) {
                std::vector<int> line(shapes[r].outer.part(row - 1), 0);
                for (int col = shapes[r].inner.part(row - 1) + 1;
                     col <= shapes[r].outer.part(row - 1); ++col)
                    line[col - 1] =
                        (col - static_cast<int>(row) + shapes[r].offset) * k + r;
                rows.push_back(std::move(line));
            }
            out.push_back(Tableau(std::move(rows)));
        }
        return out;
    }

    // Grammar: components ";"-separated, each "outer/inner" or "outer",
    // optionally "@<offset>"; partition parts comma-separated, or digit
    // shorthand ("33" = 3,3).
    static SkewTuple parse(const std::string& text)
    {
        auto parse_partition = [](const std::string& s) {
            if (s.empty()) return Partition();
            if (s.find(',') != std::string::npos) return Partition::parse(s);
            std::vector<int> parts;
            for (char c : s) {
                if (c < '0' || c > '9') throw std::invalid_argument("bad partition: " + s);
                parts.push_back(c - '0');
            }
            return Partition(std::move(parts));
        };
        SkewTuple out;
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t e = text.find(';', pos);
            if (e == std::string::npos) e = text.size();
            std::string comp = text.substr(pos, e - pos);
            int offset = 0;
            if (auto at = comp.find('@'); at != std::string::npos) {
                offset = std::stoi(comp.substr(at + 1));
                comp = comp.substr(0, at);
            }
            std::string outer = comp, inner;
            if (auto slash = comp.find('/'); slash != std::string::npos) {
                outer = comp.substr(0, slash);
                inner = comp.substr(slash + 1);
            }
            out.shapes.emplace_back(parse_partition(outer), parse_partition(inner), offset);
            if (e == text.size()) break;
            pos = e + 1;
        }
        if (out.shapes.empty()) throw std::invalid_argument("empty shape tuple");
        return out;
    }

    std::string str() const
    {
        std::string s;
        for (size_t i = 0; i < shapes.size(); ++i) {
            if (i) s += ";";
            s += shapes[i].str();
        }
        return s;
    }
};

namespace detail {

// Row index of the addable cell of the given content, or 0.
inline int addable_row(const Partition& p, int content)
{
    for (size_t a = 1; a <= p.rows() + 1; ++a) {
        int col = p.part(a - 1) + 1;
        if (col - static_cast<int>(a) != content) continue;
        if (a > 1 && p.part(a - 2) < col) return 0; // would break weak decrease
        return static_cast<int>(a);
    }
    return 0;
}

inline Partition add_cell(const Partition& p, int row)
{
    std::vector<int> parts(p.parts());
    if (row == static_cast<int>(parts.size()) + 1) parts.push_back(1);
    else parts[row - 1]++;
    return Partition(std::move(parts));
}

} // namespace detail

// All words v with nu . u_v = mu under the content-indexed cell action,
// lexicographically sorted.
inline std::vector<Word> words_of(const SkewTuple& beta)
{
    int k = beta.level();
    auto contents = beta.shifted_contents();
    for (int c : contents)
        if (c < 1 || c > kMaxAlphabet)
            throw std::invalid_argument("shifted content outside the alphabet: " +
                                        std::to_string(c));
    std::vector<Partition> state, target;
    for (auto& s : beta.shapes) {
        state.push_back(s.inner);
        target.push_back(s.outer);
    }
    std::map<int, int> remaining;
    for (int c : contents) remaining[c]++;
    std::vector<Word> out;
    std::vector<uint8_t> cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == contents.size()) {
            for (int r = 0; r < k; ++r)
                if (!(state[r] == target[r])) return;
            out.push_back(Word(cur));
            return;
        }
        for (auto& [x, cnt] : remaining) {
            if (cnt == 0) continue;
            int r = ((x % k) + k) % k;
            int c = (x - r) / k;
            int rel = c - beta.shapes[r].offset; // content within the stored partition
            int row = detail::addable_row(state[r], rel);
            if (!row) continue;
            Partition saved = state[r];
            Partition grown = detail::add_cell(state[r], row);
            // never grow beyond the target
            if (grown.part(row - 1) > target[r].part(row - 1)) {
                continue;
            }
            state[r] = grown;
            cnt--;
            cur.push_back(static_cast<uint8_t>(x));
            self(self);
            cur.pop_back();
            cnt++;
            state[r] = saved;
        }
    };
    rec(rec);
    return out;
}

// Sum over W^k(beta) of q^{inv_k} Q_{Des}.
inline FundExpansion<QFrac> llt_polynomial_fund(const SkewTuple& beta)
{
    FundExpansion<QFrac> f(beta.cell_count());
    for (auto& v : words_of(beta))
        f.add(Composition::from_descents(v.descent_set(), static_cast<int>(v.size())),
              QFrac::q_power(inv_k(v, beta.level())));
    return f;
}

inline SchurExpansion<QFrac> llt_polynomial(const SkewTuple& beta)
{
    try {
        return schur_expand(llt_polynomial_fund(beta));
    } catch (const NotSymmetricError& e) {
        throw std::logic_error(std::string("LLT polynomial failed to peel: ") + e.what());
    }
}

inline int llt_alphabet(const SkewTuple& beta)
{
    int n = 0;
    for (int c : beta.shifted_contents()) n = std::max(n, c);
    return n;
}

// The unique level-k Assaf switchboard on {v in W^k(beta) : inv_k(v) = t}.
inline Switchboard llt_switchboard(const SkewTuple& beta, int t)
{
    std::set<Word> verts;
    int k = beta.level();
    for (auto& v : words_of(beta))
        if (inv_k(v, k) == t) verts.insert(v);
    if (verts.empty()) return Switchboard();
    IdealSpec assaf = IdealSpec::simple(Family::Iassaf, llt_alphabet(beta), k);
    return build_unique(verts, assaf);
}

// Sum over t of q^t F_{Gamma_k(beta,t)}; must agree with llt_polynomial.
inline SchurExpansion<QFrac> llt_via_boards(const SkewTuple& beta)
{
    int k = beta.level();
    FundExpansion<QFrac> total(beta.cell_count());
    std::map<int, std::set<Word>> by_t;
    for (auto& v : words_of(beta)) by_t[inv_k(v, k)].insert(v);
    IdealSpec assaf = IdealSpec::simple(Family::Iassaf, llt_alphabet(beta), k);
    for (auto& [t, verts] : by_t) {
        Switchboard b = build_unique(verts, assaf);
        FundExpansion<Rat> f = b.symfunc();
        for (auto& [comp, c] : f.terms()) total.add(comp, QFrac::q_power(t) * QFrac(c));
    }
    return schur_expand(total);
}

// c_beta^lambda(q) from the k=3 tableau rule: sum of q^{inv_3(sqread(T))}
// over T in RSST(lambda; N) with sqread(T) in W^3(beta).
inline SchurExpansion<QFrac> schur_coeffs_sqread(const SkewTuple& beta)
{
    if (beta.level() != 3) throw std::invalid_argument("sqread coefficients need k = 3");
    int n = beta.cell_count();
    int N = llt_alphabet(beta);
    auto words = words_of(beta);
    std::set<Word> in_w(words.begin(), words.end());
    SchurExpansion<QFrac> out(n);
    for (auto& lam : partitions_of(n))
        for (auto& t : enumerate_rsst(lam, N)) {
            Word r = sqread(t);
            if (in_w.count(r)) out.add(lam, QFrac::q_power(inv_k(r, 3)));
        }
    return out;
}

} // namespace ncsf
