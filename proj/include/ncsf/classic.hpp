#pragma once

#include <ncsf/switchboard.hpp>
#include <ncsf/tableau.hpp>

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncsf {

constexpr int kMaxReducedWordGroup = 8; // Red enumeration capped at S_8

// Permutation in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> oneline) : p_(std::move(oneline))
    {
        std::vector<int> sorted(p_);
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i) + 1)
                throw std::invalid_argument("not a permutation");
    }

    static Permutation parse(const std::string& s)
    {
        std::vector<int> v;
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation: " + s);
            v.push_back(c - '0');
        }
        return Permutation(std::move(v));
    }

    size_t size() const { return p_.size(); }
    int operator()(int i) const { return p_[i - 1]; } // 1-based
    const std::vector<int>& oneline() const { return p_; }

    bool is_identity() const
    {
        for (size_t i = 0; i < p_.size(); ++i)
            if (p_[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    Permutation apply_right(int i) const // swap positions i, i+1
    {
        std::vector<int> v(p_);
        std::swap(v[i - 1], v[i]);
        return Permutation(std::move(v));
    }

    int length() const // inversion count
    {
        int inv = 0;
        for (size_t i = 0; i < p_.size(); ++i)
            for (size_t j = i + 1; j < p_.size(); ++j)
                if (p_[i] > p_[j]) inv++;
        return inv;
    }

    std::string str() const
    {
        std::string s;
        for (int x : p_) s += std::to_string(x);
        return s;
    }

private:
    std::vector<int> p_;
};

// All reduced words, by recursive descent on right descents.
inline std::vector<Word> reduced_words(const Permutation& pi)
{
    if (pi.size() > kMaxReducedWordGroup)
        throw std::invalid_argument("reduced-word enumeration capped at S_8");
    std::vector<Word> out;
    std::vector<uint8_t> cur;
    auto rec = [&](auto&& self, const Permutation& p) -> void {
        if (p.is_identity()) {
            std::vector<uint8_t> rev(cur.rbegin(), cur.rend());
            out.push_back(Word(std::move(rev)));
            return;
        }
        for (int i = 1; i < static_cast<int>(p.size()); ++i) {
            if (p(i) <= p(i + 1)) continue; // not a right descent
            cur.push_back(static_cast<uint8_t>(i));
            self(self, p.apply_right(i));
            cur.pop_back();
        }
    };
    rec(rec, pi);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// The Stanley symmetric function of pi in the Schur basis, recomputed two
// ways: peeling the Q-sum over Red(pi), and counting tableaux whose column
// reading word is reduced for pi.
inline SchurExpansion<Rat> stanley_symmetric(const Permutation& pi)
{
    auto red = reduced_words(pi);
    std::set<Word> red_set(red.begin(), red.end());
    int n = pi.length();
    FundExpansion<Rat> f(n);
    for (auto& w : red)
        f.add(Composition::from_descents(w.descent_set(), n), Rat(1));
    SchurExpansion<Rat> peeled = schur_expand(f);

    int N = static_cast<int>(pi.size()) - 1;
    for (auto& lam : partitions_of(n)) {
        long count = 0;
        for (auto& t : enumerate_ssyt(lam, N))
            if (red_set.count(colword(t))) count++;
        if (peeled.coeff(lam) != Rat(count))
            throw std::logic_error("tableau count disagrees with the peeled expansion");
    }
    return peeled;
}

// The unique nilplactic switchboard on Red(pi).
inline Switchboard nilplactic_board(const Permutation& pi)
{
    auto red = reduced_words(pi);
    std::set<Word> verts(red.begin(), red.end());
    IdealSpec nplac = IdealSpec::simple(Family::Inplac, static_cast<int>(pi.size()) - 1);
    return build_unique(verts, nplac);
}

// All words of permutations of {1..n}.
inline std::set<Word> permutation_words(int n)
{
    std::set<Word> out;
    std::vector<uint8_t> v(n);
    std::iota(v.begin(), v.end(), 1);
    do out.insert(Word{std::vector<uint8_t>(v)});
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

namespace detail {

inline const char* kHeckeTop = "v 2112\nv 2212\nv 2121\nv 1211\nv 1221\n"
                               "e 2 2112 2212\ne 3 2212 2121\ne 2 2121 1211\ne 3 1211 1221\n";
inline const char* kHeckeMiddle = "v 2122\nv 1212\nv 1121\ne 2 2122 1212\ne 3 1212 1121\n";
inline const char* kHeckeBottom = "v 2111\nv 2211\nv 2221\ne 2 2111 2211\ne 3 2211 2221\n";

} // namespace detail

// The three displayed boards validate, their vertex sums lie in the Hecke
// ideal's perp, and their symmetric functions come out as stated.
inline bool hecke_fixture_check(std::string* detail_out = nullptr)
{
    IdealSpec ih = IdealSpec::simple(Family::IH, 2);
    struct Expect {
        const char* text;
        std::vector<std::pair<Partition, long>> schur;
    };
    std::vector<Expect> fixtures{
        {detail::kHeckeTop, {{Partition({3, 1}), 1}, {Partition({2, 2}), 1}}},
        {detail::kHeckeMiddle, {{Partition({3, 1}), 1}}},
        {detail::kHeckeBottom, {{Partition({3, 1}), 1}}},
    };
    for (auto& fx : fixtures) {
        Switchboard b = Switchboard::parse(fx.text);
        std::string why;
        if (!validate_semimatched(b, ih, &why)) {
            if (detail_out) *detail_out = "board invalid: " + why;
            return false;
        }
        if (!in_perp<Rat>(b.vertex_sum(), ih)) {
            if (detail_out) *detail_out = "vertex sum not in the Hecke perp";
            return false;
        }
        SchurExpansion<Rat> want(4);
        for (auto& [p, c] : fx.schur) want.add(p, Rat(c));
        if (!(schur_expand(b.symfunc()) == want)) {
            if (detail_out) *detail_out = "schur expansion mismatch";
            return false;
        }
    }
    return true;
}

} // namespace ncsf
