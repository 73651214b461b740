#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncsf {

// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : p_(std::move(parts))
    {
        while (!p_.empty() && p_.back() == 0) p_.pop_back();
        for (size_t i = 0; i < p_.size(); ++i) {
            if (p_[i] <= 0 || (i > 0 && p_[i] > p_[i - 1]))
                throw std::invalid_argument("not weakly decreasing positive parts");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return p_; }
    size_t rows() const { return p_.size(); }
    int part(size_t i) const { return i < p_.size() ? p_[i] : 0; } // 0-based
    int size() const { return std::accumulate(p_.begin(), p_.end(), 0); }
    bool empty() const { return p_.empty(); }

    Partition conjugate() const
    {
        std::vector<int> c;
        if (p_.empty()) return Partition();
        c.resize(p_[0], 0);
        for (int part : p_)
            for (int j = 0; j < part; ++j) c[j]++;
        return Partition(std::move(c));
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }

    std::string str() const
    {
        std::string s;
        for (size_t i = 0; i < p_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(p_[i]);
        }
        return s.empty() ? "-" : s;
    }
    static Partition parse(const std::string& s)
    {
        if (s.empty() || s == "-") return Partition();
        std::vector<int> v;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t e = s.find(',', pos);
            if (e == std::string::npos) e = s.size();
            v.push_back(std::stoi(s.substr(pos, e - pos)));
            pos = e + 1;
        }
        return Partition(std::move(v));
    }

private:
    std::vector<int> p_;
};

inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Composition of n: positive parts; bijective with descent subsets of
// {1..n-1}.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : p_(std::move(parts))
    {
        for (int x : p_)
            if (x <= 0) throw std::invalid_argument("composition parts must be positive");
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    static Composition from_descents(const std::set<int>& des, int n)
    {
        std::vector<int> parts;
        int prev = 0;
        for (int d : des) {
            parts.push_back(d - prev);
            prev = d;
        }
        if (n > prev) parts.push_back(n - prev);
        return Composition(std::move(parts));
    }
    std::set<int> descents() const
    {
        std::set<int> d;
        int acc = 0;
        for (size_t i = 0; i + 1 < p_.size(); ++i) {
            acc += p_[i];
            d.insert(acc);
        }
        return d;
    }

    const std::vector<int>& parts() const { return p_; }
    int size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

    bool is_partition() const
    {
        for (size_t i = 0; i + 1 < p_.size(); ++i)
            if (p_[i] < p_[i + 1]) return false;
        return true;
    }
    Partition to_partition() const
    {
        if (!is_partition()) throw std::invalid_argument("composition is not a partition");
        return Partition(p_);
    }

    friend bool operator==(const Composition& a, const Composition& b) { return a.p_ == b.p_; }
    friend bool operator<(const Composition& a, const Composition& b) { return a.p_ < b.p_; }

    std::string str() const
    {
        std::string s;
        for (size_t i = 0; i < p_.size(); ++i) {
            if (i) s += "|";
            s += std::to_string(p_[i]);
        }
        return s.empty() ? "-" : s;
    }
    static Composition parse(const std::string& s)
    {
        if (s.empty() || s == "-") return Composition();
        std::vector<int> v;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t e = s.find('|', pos);
            if (e == std::string::npos) e = s.size();
            v.push_back(std::stoi(s.substr(pos, e - pos)));
            pos = e + 1;
        }
        return Composition(std::move(v));
    }

private:
    std::vector<int> p_;
};

} // namespace ncsf
