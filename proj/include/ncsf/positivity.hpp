#pragma once

#include <ncsf/ideal.hpp>
#include <ncsf/tableau.hpp>

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace ncsf {

// Exact phase-1 simplex with Bland's anti-cycling rule.
// Decides feasibility of { A x = b, x >= 0 } over the rationals.
// On success primal holds x; on failure dual holds y with
// y^T A <= 0 and y^T b > 0.
struct SimplexOutcome {
    bool feasible = false;
    std::vector<Rat> primal;
    std::vector<Rat> dual;
};

inline SimplexOutcome phase1_simplex(std::vector<std::vector<Rat>> rows, std::vector<Rat> b)
{
    size_t q = rows.size();
    size_t m = q ? rows[0].size() : 0;
    std::vector<bool> flipped(q, false);
    for (size_t i = 0; i < q; ++i)
        if (b[i] < 0) {
            for (auto& x : rows[i]) x = -x;
            b[i] = -b[i];
            flipped[i] = true;
        }
    // tableau: columns 0..m-1 original, m..m+q-1 artificial, last = rhs
    size_t width = m + q + 1;
    std::vector<std::vector<Rat>> t(q, std::vector<Rat>(width, Rat(0)));
    for (size_t i = 0; i < q; ++i) {
        for (size_t j = 0; j < m; ++j) t[i][j] = rows[i][j];
        t[i][m + i] = 1;
        t[i][width - 1] = b[i];
    }
    // reduced-cost row for min sum(artificials): start from c - sum of rows
    std::vector<Rat> cost(width, Rat(0));
    for (size_t j = m; j < m + q; ++j) cost[j] = 1;
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < width; ++j) cost[j] -= t[i][j];
    std::vector<size_t> basis(q);
    for (size_t i = 0; i < q; ++i) basis[i] = m + i;

    while (true) {
        size_t enter = width;
        for (size_t j = 0; j + 1 < width; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        size_t leave = q;
        Rat best;
        for (size_t i = 0; i < q; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][width - 1] / t[i][enter];
            if (leave == q || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == q) throw std::logic_error("phase-1 objective unbounded");
        Rat inv = Rat(1) / t[leave][enter];
        for (auto& x : t[leave]) x *= inv;
        for (size_t i = 0; i < q; ++i) {
            if (i == leave || is_zero(t[i][enter])) continue;
            Rat f = t[i][enter];
            for (size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        if (!is_zero(cost[enter])) {
            Rat f = cost[enter];
            for (size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rat objective(0);
    for (size_t i = 0; i < q; ++i)
        if (basis[i] >= m) objective += t[i][width - 1];

    SimplexOutcome out;
    if (is_zero(objective)) {
        out.feasible = true;
        out.primal.assign(m, Rat(0));
        for (size_t i = 0; i < q; ++i)
            if (basis[i] < m) out.primal[basis[i]] = t[i][width - 1];
        return out;
    }
    out.feasible = false;
    out.dual.assign(q, Rat(0));
    for (size_t i = 0; i < q; ++i) {
        Rat y = Rat(1) - cost[m + i];
        out.dual[i] = flipped[i] ? Rat(-y) : y;
    }
    return out;
}

struct ConeCertificate {
    Rat multiplier;            // c_lambda, a positive integer after clearing
    std::map<Word, Rat> words; // nonnegative integer coefficients
};

struct FarkasWitness {
    NcPolyQ gamma; // integer dual vector: gamma in I_d-perp, <u_w,gamma> >= 0,
                   // <J,gamma> < 0
};

struct PositivityResult {
    bool positive = false;
    ConeCertificate certificate;
    FarkasWitness witness;
};

namespace detail {

// LP over one coordinate block: is target in cone(columns) + span(basis rows)?
template <class BasisPtr>
std::optional<NcPolyQ> block_lp(const NcPolyQ& target, const BasisPtr& basis,
                                std::map<Word, Rat>* cert_words)
{
    // normal-form coordinates are the non-pivot columns
    std::vector<uint32_t> free_cols;
    for (uint32_t c = 0; c < basis->cols.size(); ++c)
        if (!basis->ech.is_pivot(c)) free_cols.push_back(c);
    std::map<uint32_t, size_t> constraint_of;
    for (size_t i = 0; i < free_cols.size(); ++i) constraint_of[free_cols[i]] = i;
    size_t q = free_cols.size();

    auto nf_coords = [&](const NcPolyQ& f) {
        std::vector<Rat> v(q, Rat(0));
        NcPolyQ nf = basis->reduce(f);
        for (auto& [w, c] : nf.terms()) v[constraint_of.at(basis->col_of(w))] = c;
        return v;
    };

    std::vector<Word> lp_words;
    std::vector<std::vector<Rat>> cols;
    for (auto& w : basis->cols) {
        std::vector<Rat> col = nf_coords(NcPolyQ::monomial(w));
        bool zero = true;
        for (auto& x : col)
            if (!is_zero(x)) zero = false;
        if (zero) continue; // u_w lies in the ideal; it cannot help or hurt
        lp_words.push_back(w);
        cols.push_back(std::move(col));
    }
    std::vector<Rat> b = nf_coords(target);

    std::vector<std::vector<Rat>> rows(q, std::vector<Rat>(lp_words.size(), Rat(0)));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < q; ++i) rows[i][j] = cols[j][i];

    SimplexOutcome lp = phase1_simplex(std::move(rows), b);
    if (lp.feasible) {
        for (size_t j = 0; j < lp_words.size(); ++j)
            if (!is_zero(lp.primal[j])) (*cert_words)[lp_words[j]] = lp.primal[j];
        return std::nullopt;
    }
    // witness on the block: gamma_w = -y(NF(u_w)) for every block word
    NcPolyQ gamma;
    for (auto& w : basis->cols) {
        std::vector<Rat> col = nf_coords(NcPolyQ::monomial(w));
        Rat acc(0);
        for (size_t i = 0; i < q; ++i) acc += lp.dual[i] * col[i];
        gamma.add_term(w, -acc);
    }
    return gamma;
}

inline void integerize(NcPolyQ& gamma)
{
    mpz_class lcm(1);
    for (auto& [w, c] : gamma.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                               c.get_den().get_mpz_t());
    NcPolyQ out;
    for (auto& [w, c] : gamma.terms()) out.add_term(w, c * Rat(lcm));
    gamma = out;
}

} // namespace detail

// Decides Q-monomial positivity of J modulo the intersection of the given
// ideals at degree d.  Both result payloads are re-verified exactly before
// returning.
inline PositivityResult q_monomial_positive(const NcPolyQ& J, const std::vector<IdealSpec>& specs,
                                            int d)
{
    if (specs.empty()) throw std::invalid_argument("no ideal given");
    if (!J.is_homogeneous() || (!J.is_zero() && J.degree() != d))
        throw std::invalid_argument("J must be homogeneous of degree d");
    int N = specs[0].N;
    for (auto& s : specs)
        if (s.N != N) throw std::invalid_argument("alphabet mismatch");
        else if (s.uses_q_ring()) throw std::invalid_argument("positivity runs over the integers");

    bool kills_repeats = true;
    for (auto& s : specs)
        if (!spec_kills_repeats<Rat>(s)) kills_repeats = false;

    PositivityResult result;
    result.certificate.multiplier = 1;

    auto run_block = [&](const NcPolyQ& target,
                         const std::optional<std::vector<uint8_t>>& content) -> bool {
        std::shared_ptr<const DegreeBasis<Rat>> basis =
            specs.size() == 1 ? degree_basis<Rat>(specs[0], d, content)
                              : intersect_degree<Rat>(specs, d, content);
        auto witness = detail::block_lp(target, basis, &result.certificate.words);
        if (!witness) return true;
        detail::integerize(*witness);
        // re-verify all three witness invariants exactly
        for (auto& [w, c] : witness->terms())
            if (c < 0) throw std::logic_error("witness has a negative word coefficient");
        Rat jpair = pair(target, *witness);
        if (jpair >= 0) throw std::logic_error("witness does not separate J");
        for (auto& [pivot, row] : basis->ech.rows()) {
            NcPolyQ rowpoly = basis->to_poly(row);
            if (pair(rowpoly, *witness) != Rat(0))
                throw std::logic_error("witness is not orthogonal to the ideal");
        }
        result.positive = false;
        result.witness.gamma = *witness;
        return false;
    };

    bool ok;
    if (kills_repeats) {
        // decompose J by repeat-free content block; each block decides
        // independently and a zero coefficient elsewhere always works
        std::map<std::vector<uint8_t>, NcPolyQ> blocks;
        for (auto& [w, c] : J.terms()) {
            if (w.has_repeated_letter()) continue;
            blocks[w.content()].add_term(w, c);
        }
        ok = true;
        for (auto& [ct, part] : blocks)
            if (!run_block(part, ct)) {
                ok = false;
                break;
            }
    } else {
        ok = run_block(J, std::nullopt);
    }

    if (!ok) return result;

    // clear denominators: multiplier * J == sum a_w u_w with integers
    mpz_class lcm(1);
    for (auto& [w, c] : result.certificate.words)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    result.certificate.multiplier = Rat(lcm);
    for (auto& [w, c] : result.certificate.words) c *= Rat(lcm);

    // re-verify the congruence modulo every listed ideal
    NcPolyQ rhs;
    for (auto& [w, c] : result.certificate.words) rhs.add_term(w, c);
    NcPolyQ lhs = result.certificate.multiplier * J;
    for (auto& s : specs)
        if (!congruent<Rat>(lhs, rhs, s))
            throw std::logic_error("certificate failed re-verification");
    result.positive = true;
    return result;
}

inline PositivityResult q_monomial_positive(const NcPolyQ& J, const IdealSpec& spec, int d)
{
    return q_monomial_positive(J, std::vector<IdealSpec>{spec}, d);
}

// The three Farkas-witness invariants, checked exactly against a
// user-supplied gamma: nonnegative word coefficients, orthogonality to the
// degree component of the (intersected) ideal, and <J, gamma> < 0.
inline bool verify_witness(const NcPolyQ& J, const NcPolyQ& gamma,
                           const std::vector<IdealSpec>& specs, std::string* why = nullptr)
{
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (gamma.is_zero()) return fail("witness is zero");
    if (!gamma.is_homogeneous()) return fail("witness is not homogeneous");
    int d = gamma.degree();
    for (auto& [w, c] : gamma.terms())
        if (c < 0) return fail("negative coefficient on " + w.str());
    if (specs.size() == 1) {
        if (!in_perp<Rat>(gamma, specs[0])) return fail("witness is not in the ideal's perp");
    } else {
        bool kills = true;
        for (auto& s : specs)
            if (!spec_kills_repeats<Rat>(s)) kills = false;
        std::set<std::vector<uint8_t>> contents;
        if (kills) {
            for (auto& [w, c] : gamma.terms()) {
                if (w.has_repeated_letter())
                    return fail("witness touches a repeated-letter word");
                contents.insert(w.content());
            }
        }
        auto check_rows = [&](const std::shared_ptr<const DegreeBasis<Rat>>& basis) {
            for (auto& [pivot, row] : basis->ech.rows())
                if (pair(basis->to_poly(row), gamma) != Rat(0)) return false;
            return true;
        };
        if (kills) {
            for (auto& ct : contents)
                if (!check_rows(intersect_degree<Rat>(specs, d, ct)))
                    return fail("witness is not orthogonal to the intersection");
        } else if (!check_rows(intersect_degree<Rat>(specs, d))) {
            return fail("witness is not orthogonal to the intersection");
        }
    }
    if (pair(J, gamma) >= 0) return fail("witness does not separate J");
    return true;
}

// congruent(J, signed sum, spec) across every listed spec, hence modulo the
// intersection.
inline bool verify_expansion(const NcPolyQ& J, const std::vector<std::pair<int, Word>>& words,
                             const std::vector<IdealSpec>& specs)
{
    NcPolyQ rhs;
    for (auto& [sign, w] : words) rhs.add_term(w, Rat(sign));
    for (auto& s : specs)
        if (!congruent<Rat>(J, rhs, s)) return false;
    return true;
}

// All sign-free sums of one representative per Knuth class of each standard
// tableau of shape lambda that are congruent to J_lambda modulo every spec.
inline std::vector<std::vector<Word>> search_expansions(const Partition& lambda,
                                                        const std::vector<IdealSpec>& specs,
                                                        long* candidates_out = nullptr)
{
    if (specs.empty()) throw std::invalid_argument("no ideal given");
    int N = specs[0].N;
    int d = lambda.size();
    NcPolyQ J = nc_schur_e(lambda, N);

    std::vector<std::vector<Word>> classes;
    for (auto& t : enumerate_syt(lambda)) classes.push_back(plactic_class(t));

    // normal form of J and of each candidate word, per spec
    struct PerSpec {
        std::vector<NcPolyQ> class_nf; // flattened per word
        NcPolyQ j_nf;
    };
    std::vector<PerSpec> tables(specs.size());
    std::vector<Word> flat;
    std::vector<size_t> class_of;
    for (size_t ci = 0; ci < classes.size(); ++ci)
        for (auto& w : classes[ci]) {
            flat.push_back(w);
            class_of.push_back(ci);
        }
    for (size_t si = 0; si < specs.size(); ++si) {
        tables[si].j_nf = reduce_mod(J, specs[si]);
        for (auto& w : flat) tables[si].class_nf.push_back(reduce_mod(NcPolyQ::monomial(w), specs[si]));
    }

    std::vector<std::vector<size_t>> index_by_class(classes.size());
    for (size_t i = 0; i < flat.size(); ++i) index_by_class[class_of[i]].push_back(i);

    std::vector<std::vector<Word>> found;
    std::vector<size_t> choice(classes.size(), 0);
    long candidates = 0;
    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == classes.size()) {
            candidates++;
            for (size_t si = 0; si < specs.size(); ++si) {
                NcPolyQ sum;
                for (size_t cj = 0; cj < classes.size(); ++cj)
                    sum += tables[si].class_nf[choice[cj]];
                if (!(sum == tables[si].j_nf)) return;
            }
            std::vector<Word> expansion;
            for (size_t cj = 0; cj < classes.size(); ++cj) expansion.push_back(flat[choice[cj]]);
            found.push_back(std::move(expansion));
            return;
        }
        for (size_t i : index_by_class[ci]) {
            choice[ci] = i;
            self(self, ci + 1);
        }
    };
    rec(rec, 0);
    if (candidates_out) *candidates_out = candidates;
    return found;
}

} // namespace ncsf
