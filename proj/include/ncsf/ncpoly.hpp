#pragma once

#include <ncsf/qpoly.hpp>
#include <ncsf/rational.hpp>
#include <ncsf/word.hpp>

#include <map>
#include <sstream>
#include <stdexcept>

namespace ncsf {

// Sparse element of the free algebra over the scalar ring K (or of its dual:
// the carrier is shared, the pairing is basis-diagonal).  Zero coefficients
// are never stored; terms iterate in canonical (degree, lex) order.
template <class K>
class NcPoly {
public:
    using Terms = std::map<Word, K, TermOrder>;

    NcPoly() = default;
    static NcPoly unit() { return monomial(Word()); }
    static NcPoly monomial(const Word& w, K c = K(1))
    {
        NcPoly p;
        p.add_term(w, c);
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }

    K coeff(const Word& w) const
    {
        auto it = t_.find(w);
        return it == t_.end() ? K(0) : it->second;
    }

    void add_term(const Word& w, const K& c)
    {
        if (is_zero_scalar(c)) return;
        auto [it, fresh] = t_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (is_zero_scalar(it->second)) t_.erase(it);
        }
    }

    // True when every word has the same length; degree() is then that length.
    bool is_homogeneous() const
    {
        if (t_.empty()) return true;
        size_t d = t_.begin()->first.size();
        for (auto& [w, c] : t_)
            if (w.size() != d) return false;
        return true;
    }
    int degree() const
    {
        if (t_.empty()) return -1;
        return static_cast<int>(t_.rbegin()->first.size());
    }

    friend NcPoly operator+(const NcPoly& a, const NcPoly& b)
    {
        NcPoly r(a);
        for (auto& [w, c] : b.t_) r.add_term(w, c);
        return r;
    }
    friend NcPoly operator-(const NcPoly& a, const NcPoly& b)
    {
        NcPoly r(a);
        for (auto& [w, c] : b.t_) r.add_term(w, -c);
        return r;
    }
    NcPoly operator-() const
    {
        NcPoly r;
        for (auto& [w, c] : t_) r.t_.emplace(w, -c);
        return r;
    }
    NcPoly& operator+=(const NcPoly& o)
    {
        for (auto& [w, c] : o.t_) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o)
    {
        for (auto& [w, c] : o.t_) add_term(w, -c);
        return *this;
    }

    // Concatenation product, extended bilinearly.
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b)
    {
        NcPoly r;
        for (auto& [wa, ca] : a.t_)
            for (auto& [wb, cb] : b.t_) r.add_term(wa * wb, ca * cb);
        return r;
    }
    friend NcPoly operator*(const K& c, const NcPoly& a)
    {
        NcPoly r;
        for (auto& [w, cw] : a.t_) r.add_term(w, c * cw);
        return r;
    }

    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.t_ == b.t_; }

    std::string str() const
    {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [w, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << to_string(c) << ")";
            if (!w.empty()) os << "*u_" << w.str();
        }
        return os.str();
    }

private:
    static bool is_zero_scalar(const K& c) { return ncsf::is_zero(c); }
    Terms t_;
};

// <u_w, v> = delta_{vw}, extended bilinearly in both arguments.
template <class K>
K pair(const NcPoly<K>& f, const NcPoly<K>& gamma)
{
    const auto& small = f.term_count() <= gamma.term_count() ? f : gamma;
    const auto& large = f.term_count() <= gamma.term_count() ? gamma : f;
    K acc(0);
    for (auto& [w, c] : small.terms()) acc += c * large.coeff(w);
    return acc;
}

using NcPolyQ = NcPoly<Rat>;
using NcPolyF = NcPoly<QFrac>;

// Integer/rational coefficients embed into the q-field termwise.
inline NcPolyF to_qfield(const NcPolyQ& f)
{
    NcPolyF r;
    for (auto& [w, c] : f.terms()) r.add_term(w, QFrac(c));
    return r;
}

} // namespace ncsf
