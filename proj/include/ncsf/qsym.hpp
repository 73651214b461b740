#pragma once

#include <ncsf/ncpoly.hpp>
#include <ncsf/partitions.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ncsf {

// Descent compositions of the standard Young tableaux of shape lambda,
// with multiplicity.  A tableau is traversed as a growth chain of diagrams;
// i is a descent when i+1 lands in a strictly lower row than i.
inline std::vector<Composition> syt_descent_compositions(const Partition& lambda)
{
    std::vector<Composition> out;
    int n = lambda.size();
    if (n == 0) return out;
    std::vector<int> mu(lambda.rows(), 0);
    std::set<int> des;
    auto rec = [&](auto&& self, int step, int prev_row) -> void {
        if (step == n) {
            out.push_back(Composition::from_descents(des, n));
            return;
        }
        for (size_t r = 0; r < mu.size(); ++r) {
            if (mu[r] >= lambda.part(r)) continue;
            if (r > 0 && mu[r - 1] <= mu[r]) continue;
            bool descent = step > 0 && static_cast<int>(r) > prev_row;
            if (descent) des.insert(step);
            mu[r]++;
            self(self, step + 1, static_cast<int>(r));
            mu[r]--;
            if (descent) des.erase(step);
        }
    };
    rec(rec, 0, -1);
    return out;
}

inline long syt_count(const Partition& lambda)
{
    return static_cast<long>(syt_descent_compositions(lambda).size());
}

// Value in the fundamental quasisymmetric basis, all compositions of one n.
template <class K>
class FundExpansion {
public:
    using Terms = std::map<Composition, K>;

    FundExpansion() = default;
    explicit FundExpansion(int degree) : n_(degree) {}

    int degree() const { return n_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Composition& a, const K& c)
    {
        if (ncsf::is_zero(c)) return;
        if (a.size() != n_) throw std::invalid_argument("composition of wrong total");
        auto [it, fresh] = t_.emplace(a, c);
        if (!fresh) {
            it->second += c;
            if (ncsf::is_zero(it->second)) t_.erase(it);
        }
    }
    K coeff(const Composition& a) const
    {
        auto it = t_.find(a);
        return it == t_.end() ? K(0) : it->second;
    }

    FundExpansion& operator+=(const FundExpansion& o)
    {
        if (o.n_ != n_ && !o.is_zero()) throw std::invalid_argument("degree mismatch");
        for (auto& [a, c] : o.t_) add(a, c);
        return *this;
    }
    friend FundExpansion operator*(const K& c, const FundExpansion& f)
    {
        FundExpansion r(f.n_);
        for (auto& [a, cc] : f.t_) r.add(a, c * cc);
        return r;
    }
    friend bool operator==(const FundExpansion& a, const FundExpansion& b)
    {
        return a.t_ == b.t_;
    }

private:
    int n_ = 0;
    Terms t_;
};

// Value in the Schur basis.
template <class K>
class SchurExpansion {
public:
    using Terms = std::map<Partition, K>;

    SchurExpansion() = default;
    explicit SchurExpansion(int degree) : n_(degree) {}

    int degree() const { return n_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Partition& p, const K& c)
    {
        if (ncsf::is_zero(c)) return;
        if (p.size() != n_) throw std::invalid_argument("partition of wrong size");
        auto [it, fresh] = t_.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (ncsf::is_zero(it->second)) t_.erase(it);
        }
    }
    K coeff(const Partition& p) const
    {
        auto it = t_.find(p);
        return it == t_.end() ? K(0) : it->second;
    }
    friend bool operator==(const SchurExpansion& a, const SchurExpansion& b)
    {
        return a.t_ == b.t_;
    }

    // One line per term, canonical order: "<partition> : <scalar>".
    std::string str() const
    {
        std::ostringstream os;
        for (auto& [p, c] : t_) os << p.str() << " : " << to_string(c) << "\n";
        return os.str();
    }

private:
    int n_ = 0;
    Terms t_;
};

struct NotSymmetricError : std::runtime_error {
    explicit NotSymmetricError(const std::string& what) : std::runtime_error(what) {}
};

// gamma_w Q_{Des(w)} summed over the support of a homogeneous dual vector.
template <class K>
FundExpansion<K> fund_from_dual(const NcPoly<K>& gamma)
{
    if (!gamma.is_homogeneous()) throw std::invalid_argument("mixed-degree dual vector");
    FundExpansion<K> f(gamma.is_zero() ? 0 : gamma.degree());
    for (auto& [w, c] : gamma.terms())
        f.add(Composition::from_descents(w.descent_set(), static_cast<int>(w.size())), c);
    return f;
}

// s_lambda as the sum of Q over SYT descent compositions.
template <class K>
FundExpansion<K> schur_to_fund(const Partition& lambda)
{
    FundExpansion<K> f(lambda.size());
    for (const auto& a : syt_descent_compositions(lambda)) f.add(a, K(1));
    return f;
}

// Inverse of schur_to_fund by greedy peeling: the lex-largest remaining
// composition must at each step be a partition (descent compositions of
// SYT(lambda) are dominated by lambda, so peeling is unitriangular).
template <class K>
SchurExpansion<K> schur_expand(const FundExpansion<K>& f)
{
    SchurExpansion<K> out(f.degree());
    FundExpansion<K> rest = f;
    while (!rest.is_zero()) {
        const auto& [alpha, c] = *rest.terms().rbegin();
        if (!alpha.is_partition())
            throw NotSymmetricError("leading composition " + alpha.str() + " is not a partition");
        Partition lambda = alpha.to_partition();
        K coeff = c;
        out.add(lambda, coeff);
        rest += (-coeff) * schur_to_fund<K>(lambda);
    }
    return out;
}

// Monomial expansion of f in exactly n = degree commuting variables;
// keys are exponent vectors.
template <class K>
std::map<std::vector<int>, K> monomial_expansion(const FundExpansion<K>& f)
{
    int n = f.degree();
    std::map<std::vector<int>, K> mono;
    for (auto& [alpha, c] : f.terms()) {
        auto des = alpha.descents();
        std::vector<int> expo(n, 0);
        auto rec = [&](auto&& self, int pos, int var) -> void {
            if (pos == n) {
                auto [it, fresh] = mono.emplace(expo, c);
                if (!fresh) it->second += c;
                return;
            }
            int lo = var;
            if (pos > 0 && des.count(pos)) lo = var + 1;
            for (int v = lo; v <= n; ++v) {
                expo[v - 1]++;
                self(self, pos + 1, v);
                expo[v - 1]--;
            }
        };
        if (n > 0) rec(rec, 0, 1);
        else mono[expo] = c;
    }
    for (auto it = mono.begin(); it != mono.end();)
        it = ncsf::is_zero(it->second) ? mono.erase(it) : std::next(it);
    return mono;
}

// Invariance under all adjacent variable transpositions.
template <class K>
bool is_symmetric(const FundExpansion<K>& f)
{
    auto mono = monomial_expansion(f);
    int n = f.degree();
    for (auto& [e, c] : mono) {
        for (int j = 0; j + 1 < n; ++j) {
            if (e[j] == e[j + 1]) continue;
            std::vector<int> s(e);
            std::swap(s[j], s[j + 1]);
            auto it = mono.find(s);
            if (it == mono.end() || !(it->second == c)) return false;
        }
    }
    return true;
}

} // namespace ncsf
