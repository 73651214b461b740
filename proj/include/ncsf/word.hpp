#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncsf {

constexpr int kMaxAlphabet = 63;
constexpr int kMaxWordLength = 63;

// A word over the alphabet {1..N}, N <= 63.  The empty word is the unit of
// the free monoid.  Words double as basis labels of the dual space.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<uint8_t> letters) : w_(std::move(letters)) { check(); }
    Word(std::initializer_list<int> letters)
    {
        w_.reserve(letters.size());
        for (int x : letters) w_.push_back(static_cast<uint8_t>(x));
        check();
    }

    size_t size() const { return w_.size(); }
    bool empty() const { return w_.empty(); }
    uint8_t operator[](size_t i) const { return w_[i]; }
    const std::vector<uint8_t>& letters() const { return w_; }

    uint8_t max_letter() const
    {
        uint8_t m = 0;
        for (uint8_t x : w_) m = std::max(m, x);
        return m;
    }

    friend Word operator*(const Word& a, const Word& b)
    {
        std::vector<uint8_t> v(a.w_);
        v.insert(v.end(), b.w_.begin(), b.w_.end());
        return Word(std::move(v));
    }

    Word subword(size_t from, size_t len) const
    {
        return Word(std::vector<uint8_t>(w_.begin() + from, w_.begin() + from + len));
    }

    // Des(w) = { i : w_i > w_{i+1} }, positions 1-based.
    std::set<int> descent_set() const
    {
        std::set<int> d;
        for (size_t i = 0; i + 1 < w_.size(); ++i)
            if (w_[i] > w_[i + 1]) d.insert(static_cast<int>(i) + 1);
        return d;
    }

    bool has_repeated_letter() const
    {
        uint64_t seen = 0;
        for (uint8_t x : w_) {
            if (seen & (1ull << x)) return true;
            seen |= 1ull << x;
        }
        return false;
    }

    // Letter multiset as a sorted vector.
    std::vector<uint8_t> content() const
    {
        std::vector<uint8_t> c(w_);
        std::sort(c.begin(), c.end());
        return c;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.w_ == b.w_; }
    friend bool operator!=(const Word& a, const Word& b) { return a.w_ != b.w_; }
    // Canonical term order: degree first, then lexicographic.
    friend bool operator<(const Word& a, const Word& b)
    {
        if (a.w_.size() != b.w_.size()) return a.w_.size() < b.w_.size();
        return a.w_ < b.w_;
    }

    // Digits concatenated when all letters are single-digit, otherwise
    // comma-separated.
    std::string str() const
    {
        if (empty()) return "-";
        bool small = max_letter() <= 9;
        std::string s;
        for (size_t i = 0; i < w_.size(); ++i) {
            if (!small && i) s += ",";
            s += std::to_string(static_cast<int>(w_[i]));
        }
        return s;
    }

    static Word parse(const std::string& s)
    {
        std::vector<uint8_t> v;
        if (s == "-" || s.empty()) return Word();
        if (s.find(',') != std::string::npos) {
            size_t pos = 0;
            while (pos < s.size()) {
                size_t e = s.find(',', pos);
                if (e == std::string::npos) e = s.size();
                int x = std::stoi(s.substr(pos, e - pos));
                v.push_back(static_cast<uint8_t>(x));
                pos = e + 1;
            }
        } else {
            for (char c : s) {
                if (c < '1' || c > '9') throw std::invalid_argument("bad word: " + s);
                v.push_back(static_cast<uint8_t>(c - '0'));
            }
        }
        return Word(std::move(v));
    }

private:
    void check() const
    {
        if (w_.size() > kMaxWordLength)
            throw std::invalid_argument("word longer than 63 letters");
        for (uint8_t x : w_)
            if (x < 1 || x > kMaxAlphabet)
                throw std::invalid_argument("letter outside 1..63");
    }
    std::vector<uint8_t> w_;
};

struct TermOrder {
    bool operator()(const Word& a, const Word& b) const { return a < b; }
};

// Inversions formed by entries that differ by less than k.
inline int inv_k(const Word& v, int k)
{
    int count = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) {
            int d = static_cast<int>(v[i]) - static_cast<int>(v[j]);
            if (d > 0 && d < k) count++;
        }
    return count;
}

// v is a nonzero k-word when every repeated value v_i = v_j (i < j) has
// some i < s < t < j with {v_s, v_t} = {v_i - k, v_i + k}.
inline bool nonzero_k_word(const Word& v, int k)
{
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] != v[j]) continue;
            int lo = static_cast<int>(v[i]) - k, hi = static_cast<int>(v[i]) + k;
            bool ok = false;
            for (size_t s = i + 1; s + 1 < j && !ok; ++s)
                for (size_t t = s + 1; t < j && !ok; ++t) {
                    int a = v[s], b = v[t];
                    if ((a == lo && b == hi) || (a == hi && b == lo)) ok = true;
                }
            if (!ok) return false;
        }
    return true;
}

// All words of the given length over {1..n}, in canonical (lex) order.
inline std::vector<Word> all_words(int n, int length)
{
    std::vector<Word> out;
    std::vector<uint8_t> cur;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == length) {
            out.push_back(Word(cur));
            return;
        }
        for (int x = 1; x <= n; ++x) {
            cur.push_back(static_cast<uint8_t>(x));
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace ncsf
