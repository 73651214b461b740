#pragma once

#include <ncsf/ncpoly.hpp>
#include <ncsf/partitions.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace ncsf {

// e_k(u_S): sum of strictly decreasing length-k words from S.
// e_0 = 1; e_k = 0 for k < 0 or k > |S|.
inline NcPolyQ elementary(int k, const std::vector<int>& letter_set)
{
    NcPolyQ out;
    if (k < 0 || k > static_cast<int>(letter_set.size())) return out;
    if (k == 0) return NcPolyQ::unit();
    std::vector<int> s(letter_set);
    std::sort(s.begin(), s.end(), std::greater<int>());
    std::vector<uint8_t> cur;
    auto rec = [&](auto&& self, size_t from, int left) -> void {
        if (left == 0) {
            out.add_term(Word(cur), Rat(1));
            return;
        }
        for (size_t i = from; i + left <= s.size() + 0u && i < s.size(); ++i) {
            cur.push_back(static_cast<uint8_t>(s[i]));
            self(self, i + 1, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

inline std::vector<int> full_alphabet(int n)
{
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

inline NcPolyQ elementary(int k, int N) { return elementary(k, full_alphabet(N)); }

// h_l(u): sum of weakly increasing length-l words over {1..N}.
inline NcPolyQ complete(int l, int N)
{
    NcPolyQ out;
    if (l < 0) return out;
    if (l == 0) return NcPolyQ::unit();
    std::vector<uint8_t> cur;
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            out.add_term(Word(cur), Rat(1));
            return;
        }
        for (int x = from; x <= N; ++x) {
            cur.push_back(static_cast<uint8_t>(x));
            self(self, x, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 1, l);
    return out;
}

namespace detail {
// Signed sum over permutations of factor products; factory(i, pi_i) builds
// the i-th factor (0-based), or nullptr-like zero handling via is-zero.
template <class Factory>
NcPolyQ signed_permutation_sum(int t, Factory&& factor)
{
    NcPolyQ acc;
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                if (perm[i] > perm[j]) inv++;
        NcPolyQ prod = NcPolyQ::unit();
        bool zero = false;
        for (int i = 0; i < t && !zero; ++i) {
            NcPolyQ f = factor(i, perm[i]);
            if (f.is_zero()) zero = true;
            else prod = prod * f;
        }
        if (!zero) {
            if (inv % 2) acc -= prod;
            else acc += prod;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}
} // namespace detail

// Kostka-Naegelsbach form: signed sum over S_t of products
// e_{lambda'_i + pi(i) - i}(u), t = lambda_1.
inline NcPolyQ nc_schur_e(const Partition& lambda, int N)
{
    if (lambda.empty()) return NcPolyQ::unit();
    Partition lc = lambda.conjugate();
    int t = lambda.part(0);
    return detail::signed_permutation_sum(t, [&](int i, int pi) {
        return elementary(lc.part(i) + (pi + 1) - (i + 1), N);
    });
}

// Jacobi-Trudi form: signed sum over S_l of products h_{lambda_i + pi(i) - i}.
inline NcPolyQ nc_schur_h(const Partition& lambda, int N)
{
    if (lambda.empty()) return NcPolyQ::unit();
    int l = static_cast<int>(lambda.rows());
    return detail::signed_permutation_sum(l, [&](int i, int pi) {
        return complete(lambda.part(i) + (pi + 1) - (i + 1), N);
    });
}

// J_alpha(n): signed sum over S_l of products e_{alpha_j + pi(j) - j}(u_[n_j]).
inline NcPolyQ flagged_schur(const std::vector<int>& alpha, const std::vector<int>& flags)
{
    if (alpha.size() != flags.size())
        throw std::invalid_argument("alpha and flag tuple lengths differ");
    int l = static_cast<int>(alpha.size());
    if (l == 0) return NcPolyQ::unit();
    return detail::signed_permutation_sum(l, [&](int j, int pi) {
        return elementary(alpha[j] + (pi + 1) - (j + 1), flags[j]);
    });
}

// Augmented variant: fixed monomials u_{w^j} interleaved between factors.
inline NcPolyQ augmented_flagged_schur(const std::vector<int>& alpha,
                                       const std::vector<int>& flags,
                                       const std::vector<Word>& ws)
{
    if (alpha.size() != flags.size())
        throw std::invalid_argument("alpha and flag tuple lengths differ");
    int l = static_cast<int>(alpha.size());
    if (l == 0) return NcPolyQ::unit();
    if (ws.size() + 1 != alpha.size())
        throw std::invalid_argument("need l-1 interleaved words");
    return detail::signed_permutation_sum(l, [&](int j, int pi) {
        NcPolyQ f = elementary(alpha[j] + (pi + 1) - (j + 1), flags[j]);
        if (j + 1 < l && !f.is_zero()) f = f * NcPolyQ::monomial(ws[j]);
        return f;
    });
}

// <J_lambda(u), gamma> without expanding the determinantal sum: a word has
// coefficient 1 in a product of e's exactly when its segments of the
// prescribed lengths are strictly decreasing.
template <class K>
K schur_coeff_via_pairing(const Partition& lambda, const NcPoly<K>& gamma, int N)
{
    if (!gamma.is_homogeneous()) throw std::invalid_argument("mixed-degree dual vector");
    if (!gamma.is_zero() && gamma.degree() != lambda.size())
        throw std::invalid_argument("degree mismatch between lambda and gamma");
    if (lambda.empty()) return gamma.coeff(Word());
    Partition lc = lambda.conjugate();
    int t = lambda.part(0);
    K acc(0);
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        std::vector<int> lens(t);
        bool zero = false;
        for (int i = 0; i < t && !zero; ++i) {
            for (int j = i + 1; j < t; ++j)
                if (perm[i] > perm[j]) inv++;
            lens[i] = lc.part(i) + perm[i] - i;
            if (lens[i] < 0 || lens[i] > N) zero = true;
        }
        if (zero) continue;
        K sum(0);
        for (auto& [w, c] : gamma.terms()) {
            size_t pos = 0;
            bool fits = true;
            for (int i = 0; i < t && fits; ++i) {
                for (int j = 0; j < lens[i] && fits; ++j) {
                    if (w[pos + j] > N) fits = false;
                    if (j > 0 && w[pos + j] >= w[pos + j - 1]) fits = false;
                }
                pos += lens[i];
            }
            if (fits) sum += c;
        }
        if (inv % 2) acc -= sum;
        else acc += sum;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// Smallest j with alpha_j >= alpha_{j+1}, alpha_{l+1} = 0; 1-based.
inline int peeling_index(const std::vector<int>& alpha)
{
    int l = static_cast<int>(alpha.size());
    for (int j = 0; j < l; ++j) {
        int next = (j + 1 < l) ? alpha[j + 1] : 0;
        if (alpha[j] >= next) return j + 1;
    }
    return l; // unreachable: alpha_l >= 0 always holds
}

} // namespace ncsf
