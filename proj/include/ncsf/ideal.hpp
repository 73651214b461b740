#pragma once

#include <ncsf/linalg.hpp>
#include <ncsf/ncpoly.hpp>
#include <ncsf/ncsym.hpp>

#include <array>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncsf {

enum class Family {
    IC,
    IB,
    IS,
    Iaba,
    Iassaf,
    JlamQ,
    IlamLE,
    Iplac,
    Inplac,
    InCox,
    IH,
    Ist,
    Triples,
    Semimatched,
};

enum class TripleKind { Knuth, Rotation, Undecided };
enum class PairKind { Knuth, Braid, Undecided };

// A primitive named ideal; sums are lists of primitives.
struct IdealPrim {
    Family family;
    int k = 0; // parameter of Iaba/Iassaf/JlamQ/IlamLE
    // explicit classification, used by Triples and Semimatched only
    std::map<std::array<int, 3>, TripleKind> triples;
    std::map<int, PairKind> pairs; // key a for the pair {a, a+1}
    TripleKind triple_default = TripleKind::Knuth;
    PairKind pair_default = PairKind::Knuth;
    std::vector<Word> extra_monomials; // I_M generators of a Semimatched spec

    std::string str() const
    {
        switch (family) {
        case Family::IC: return "IC";
        case Family::IB: return "IB";
        case Family::IS: return "IS";
        case Family::Iaba: return "Iaba:" + std::to_string(k);
        case Family::Iassaf: return "Iassaf:" + std::to_string(k);
        case Family::JlamQ: return "JlamQ:" + std::to_string(k);
        case Family::IlamLE: return "IlamLE:" + std::to_string(k);
        case Family::Iplac: return "Iplac";
        case Family::Inplac: return "Inplac";
        case Family::InCox: return "InCox";
        case Family::IH: return "IH";
        case Family::Ist: return "Ist";
        case Family::Triples: {
            std::string s = "Triples:rot=";
            bool first = true;
            for (auto& [t, kind] : triples)
                if (kind == TripleKind::Rotation) {
                    if (!first) s += "|";
                    first = false;
                    s += std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
                }
            return s;
        }
        case Family::Semimatched: {
            std::ostringstream os;
            os << "Semimatched[";
            for (auto& [t, kind] : triples)
                os << t[0] << t[1] << t[2] << "=" << static_cast<int>(kind) << ";";
            os << "|";
            for (auto& [a, kind] : pairs) os << a << "=" << static_cast<int>(kind) << ";";
            os << "|d" << static_cast<int>(triple_default) << static_cast<int>(pair_default);
            os << "|";
            for (auto& w : extra_monomials) os << w.str() << ";";
            os << "]";
            return os.str();
        }
        }
        return "?";
    }
};

struct IdealSpec {
    std::vector<IdealPrim> parts;
    int N = 0;

    IdealSpec() = default;
    IdealSpec(IdealPrim p, int n) : parts{std::move(p)}, N(n) {}

    static IdealSpec simple(Family f, int N, int k = 0)
    {
        IdealPrim p;
        p.family = f;
        p.k = k;
        return IdealSpec(std::move(p), N);
    }
    IdealSpec operator+(const IdealSpec& o) const
    {
        if (N != o.N) throw std::invalid_argument("alphabet mismatch in ideal sum");
        IdealSpec r(*this);
        for (auto& p : o.parts) r.parts.push_back(p);
        return r;
    }

    bool uses_q_ring() const
    {
        for (auto& p : parts)
            if (p.family == Family::JlamQ) return true;
        return false;
    }

    std::string str() const
    {
        std::string s;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += "+";
            s += parts[i].str();
        }
        return s;
    }
};

namespace detail {

inline Word w3(int a, int b, int c)
{
    return Word{std::vector<uint8_t>{static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                                     static_cast<uint8_t>(c)}};
}
inline Word w4(int a, int b, int c, int d)
{
    return Word{std::vector<uint8_t>{static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                                     static_cast<uint8_t>(c), static_cast<uint8_t>(d)}};
}

template <class K>
NcPoly<K> binom(const Word& p, const Word& m)
{
    NcPoly<K> g;
    g.add_term(p, K(1));
    g.add_term(m, K(-1));
    return g;
}

inline TripleKind classify_triple(const IdealPrim& p, int a, int b, int c)
{
    auto it = p.triples.find({a, b, c});
    return it == p.triples.end() ? p.triple_default : it->second;
}
inline PairKind classify_pair(const IdealPrim& p, int a)
{
    auto it = p.pairs.find(a);
    return it == p.pairs.end() ? p.pair_default : it->second;
}

// The three switchboard-ideal generator shapes shared by every semimatched
// ideal.
template <class K>
void push_is_generators(std::vector<NcPoly<K>>& out, int N)
{
    for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b) {
            if (b - a == 1) {
                NcPoly<K> g;
                g.add_term(w3(b, b, a), K(1));
                g.add_term(w3(a, b, a), K(1));
                g.add_term(w3(b, a, b), K(-1));
                g.add_term(w3(b, a, a), K(-1));
                out.push_back(std::move(g));
            } else {
                out.push_back(binom<K>(w3(b, b, a), w3(b, a, b)));
                out.push_back(binom<K>(w3(b, a, a), w3(a, b, a)));
            }
        }
    for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b)
            for (int c = b + 1; c <= N; ++c) {
                NcPoly<K> g;
                g.add_term(w3(b, c, a), K(1));
                g.add_term(w3(a, c, b), K(1));
                g.add_term(w3(b, a, c), K(-1));
                g.add_term(w3(c, a, b), K(-1));
                out.push_back(std::move(g));
            }
}

template <class K>
void push_semimatched_generators(std::vector<NcPoly<K>>& out, const IdealPrim& p, int N)
{
    push_is_generators(out, N);
    for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b)
            for (int c = b + 1; c <= N; ++c) {
                switch (classify_triple(p, a, b, c)) {
                case TripleKind::Knuth:
                    out.push_back(binom<K>(w3(a, c, b), w3(c, a, b)));
                    out.push_back(binom<K>(w3(b, a, c), w3(b, c, a)));
                    break;
                case TripleKind::Rotation:
                    out.push_back(binom<K>(w3(a, c, b), w3(b, a, c)));
                    out.push_back(binom<K>(w3(c, a, b), w3(b, c, a)));
                    break;
                case TripleKind::Undecided: break;
                }
            }
    for (int a = 1; a < N; ++a) {
        int b = a + 1;
        switch (classify_pair(p, a)) {
        case PairKind::Knuth:
            out.push_back(binom<K>(w3(a, b, a), w3(b, a, a)));
            out.push_back(binom<K>(w3(b, a, b), w3(b, b, a)));
            break;
        case PairKind::Braid:
            out.push_back(binom<K>(w3(a, b, a), w3(b, a, b)));
            out.push_back(binom<K>(w3(b, a, a), w3(b, b, a)));
            break;
        case PairKind::Undecided: break;
        }
    }
}

} // namespace detail

// Generator data of a primitive ideal over K: polynomial generators plus an
// optional predicate describing the monomial part (all bad words of a given
// degree span it there).
template <class K>
struct GenSet {
    std::vector<NcPoly<K>> polys;
    std::function<bool(const Word&)> bad_word; // may be empty
    int max_poly_degree = 0;
};

template <class K>
GenSet<K> generator_set(const IdealPrim& p, int N)
{
    using detail::binom;
    using detail::w3;
    using detail::w4;
    GenSet<K> g;
    auto word_contains = [](const Word& w, const std::vector<Word>& pats) {
        for (auto& pat : pats) {
            if (pat.size() > w.size()) continue;
            for (size_t i = 0; i + pat.size() <= w.size(); ++i) {
                bool hit = true;
                for (size_t j = 0; j < pat.size() && hit; ++j)
                    if (w[i + j] != pat[j]) hit = false;
                if (hit) return true;
            }
        }
        return false;
    };
    switch (p.family) {
    case Family::IC:
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b) {
                NcPoly<K> e;
                e.add_term(w3(b, b, a), K(1));
                e.add_term(w3(a, b, a), K(1));
                e.add_term(w3(b, a, b), K(-1));
                e.add_term(w3(b, a, a), K(-1));
                g.polys.push_back(std::move(e));
            }
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b)
                for (int c = b + 1; c <= N; ++c) {
                    NcPoly<K> e;
                    e.add_term(w3(b, c, a), K(1));
                    e.add_term(w3(a, c, b), K(1));
                    e.add_term(w3(b, a, c), K(-1));
                    e.add_term(w3(c, a, b), K(-1));
                    g.polys.push_back(std::move(e));
                    NcPoly<K> f;
                    f.add_term(w4(c, b, c, a), K(1));
                    f.add_term(w4(b, c, a, c), K(1));
                    f.add_term(w4(c, b, a, c), K(-1));
                    f.add_term(w4(b, c, c, a), K(-1));
                    g.polys.push_back(std::move(f));
                }
        break;
    case Family::IB:
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b) {
                NcPoly<K> e;
                e.add_term(w3(b, b, a), K(1));
                e.add_term(w3(a, b, a), K(1));
                e.add_term(w3(b, a, b), K(-1));
                e.add_term(w3(b, a, a), K(-1));
                g.polys.push_back(std::move(e));
            }
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b)
                for (int c = b + 1; c <= N; ++c) {
                    g.polys.push_back(binom<K>(w3(b, c, a), w3(b, a, c)));
                    g.polys.push_back(binom<K>(w3(a, c, b), w3(c, a, b)));
                }
        break;
    case Family::IS:
        detail::push_is_generators(g.polys, N);
        break;
    case Family::Iaba:
        for (int a = 1; a <= N; ++a) {
            NcPoly<K> e;
            e.add_term(Word{a, a}, K(1));
            g.polys.push_back(std::move(e));
        }
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) {
                if (a == b) continue;
                NcPoly<K> e;
                e.add_term(w3(a, b, a), K(1));
                g.polys.push_back(std::move(e));
            }
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b)
                for (int c = b + 1; c <= N; ++c) {
                    if (c - a > p.k) {
                        g.polys.push_back(binom<K>(w3(b, a, c), w3(b, c, a)));
                        g.polys.push_back(binom<K>(w3(a, c, b), w3(c, a, b)));
                    } else {
                        g.polys.push_back(binom<K>(w3(b, a, c), w3(a, c, b)));
                        g.polys.push_back(binom<K>(w3(b, c, a), w3(c, a, b)));
                    }
                }
        g.bad_word = [](const Word& w) {
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] == w[i + 1]) return true;
            for (size_t i = 0; i + 2 < w.size(); ++i)
                if (w[i] == w[i + 2]) return true;
            return false;
        };
        break;
    case Family::Iassaf:
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b)
                for (int c = b + 1; c <= N; ++c) {
                    if (c - a > p.k) {
                        g.polys.push_back(binom<K>(w3(b, a, c), w3(b, c, a)));
                        g.polys.push_back(binom<K>(w3(a, c, b), w3(c, a, b)));
                    } else {
                        g.polys.push_back(binom<K>(w3(b, a, c), w3(a, c, b)));
                        g.polys.push_back(binom<K>(w3(b, c, a), w3(c, a, b)));
                    }
                }
        g.bad_word = [k = p.k](const Word& w) { return !nonzero_k_word(w, k); };
        break;
    case Family::IlamLE:
        for (int a = 1; a <= N; ++a)
            for (int c = a + 1; c <= N; ++c)
                if (c - a > p.k) g.polys.push_back(binom<K>(Word{a, c}, Word{c, a}));
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b)
                for (int c = b + 1; c <= N; ++c)
                    if (c - a <= p.k) {
                        NcPoly<K> e;
                        e.add_term(w3(b, a, c), K(1));
                        e.add_term(w3(c, a, b), K(1));
                        e.add_term(w3(b, c, a), K(-1));
                        e.add_term(w3(a, c, b), K(-1));
                        g.polys.push_back(std::move(e));
                    }
        g.bad_word = [k = p.k](const Word& w) { return !nonzero_k_word(w, k); };
        break;
    case Family::JlamQ:
        if constexpr (std::is_same_v<K, QFrac>) {
            for (int a = 1; a <= N; ++a) {
                NcPoly<K> e;
                e.add_term(Word{a, a}, K(1));
                g.polys.push_back(std::move(e));
            }
            for (int a = 1; a + p.k <= N; ++a) {
                NcPoly<K> e;
                e.add_term(w3(a + p.k, a, a + p.k), K(1));
                g.polys.push_back(std::move(e));
                NcPoly<K> f;
                f.add_term(w3(a, a + p.k, a), K(1));
                g.polys.push_back(std::move(f));
            }
            for (int a = 1; a <= N; ++a)
                for (int b = a + 1; b <= N; ++b) {
                    if (b - a > p.k) {
                        g.polys.push_back(detail::binom<K>(Word{a, b}, Word{b, a}));
                    } else if (b - a < p.k) {
                        NcPoly<K> e;
                        e.add_term(Word{a, b}, K(1));
                        e.add_term(Word{b, a}, -QFrac::q_power(-1));
                        g.polys.push_back(std::move(e));
                    }
                }
        } else {
            throw std::invalid_argument("JlamQ requires the rational-function ring");
        }
        break;
    case Family::Iplac:
        for (int a = 1; a <= N; ++a)
            for (int b = a; b <= N; ++b)
                for (int c = b + 1; c <= N; ++c)
                    g.polys.push_back(binom<K>(w3(a, c, b), w3(c, a, b)));
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b)
                for (int c = b; c <= N; ++c)
                    g.polys.push_back(binom<K>(w3(b, a, c), w3(b, c, a)));
        break;
    case Family::Inplac:
        for (int a = 1; a <= N; ++a) {
            NcPoly<K> e;
            e.add_term(Word{a, a}, K(1));
            g.polys.push_back(std::move(e));
        }
        for (int a = 1; a <= N; ++a)
            for (int c = a + 2; c <= N; ++c) {
                NcPoly<K> e;
                e.add_term(w3(a, c, a), K(1));
                g.polys.push_back(std::move(e));
                NcPoly<K> f;
                f.add_term(w3(c, a, c), K(1));
                g.polys.push_back(std::move(f));
            }
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b)
                for (int c = b + 1; c <= N; ++c) {
                    g.polys.push_back(binom<K>(w3(b, a, c), w3(b, c, a)));
                    g.polys.push_back(binom<K>(w3(a, c, b), w3(c, a, b)));
                }
        for (int a = 1; a < N; ++a)
            g.polys.push_back(binom<K>(w3(a, a + 1, a), w3(a + 1, a, a + 1)));
        break;
    case Family::InCox:
        for (int a = 1; a <= N; ++a) {
            NcPoly<K> e;
            e.add_term(Word{a, a}, K(1));
            g.polys.push_back(std::move(e));
        }
        for (int a = 1; a <= N; ++a)
            for (int c = a + 2; c <= N; ++c)
                g.polys.push_back(binom<K>(Word{a, c}, Word{c, a}));
        for (int a = 1; a < N; ++a)
            g.polys.push_back(binom<K>(w3(a, a + 1, a), w3(a + 1, a, a + 1)));
        break;
    case Family::IH:
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b)
                for (int c = b + 1; c <= N; ++c) {
                    g.polys.push_back(binom<K>(w3(b, a, c), w3(b, c, a)));
                    g.polys.push_back(binom<K>(w3(a, c, b), w3(c, a, b)));
                }
        for (int a = 1; a < N; ++a) {
            int b = a + 1;
            g.polys.push_back(binom<K>(w3(a, b, a), w3(b, a, b)));
            g.polys.push_back(binom<K>(w3(b, b, a), w3(b, a, a)));
        }
        break;
    case Family::Ist:
        g.bad_word = [](const Word& w) { return w.has_repeated_letter(); };
        break;
    case Family::Triples:
    case Family::Semimatched:
        detail::push_semimatched_generators(g.polys, p, N);
        if (!p.extra_monomials.empty()) {
            for (auto& w : p.extra_monomials) {
                NcPoly<K> e;
                e.add_term(w, K(1));
                g.polys.push_back(std::move(e));
            }
            g.bad_word = [pats = p.extra_monomials, word_contains](const Word& w) {
                return word_contains(w, pats);
            };
        }
        break;
    }
    for (auto& f : g.polys) g.max_poly_degree = std::max(g.max_poly_degree, f.degree());
    return g;
}

template <class K>
GenSet<K> generator_set(const IdealSpec& spec)
{
    GenSet<K> out;
    std::vector<std::function<bool(const Word&)>> bads;
    for (auto& p : spec.parts) {
        GenSet<K> one = generator_set<K>(p, spec.N);
        for (auto& f : one.polys) out.polys.push_back(std::move(f));
        if (one.bad_word) bads.push_back(one.bad_word);
        out.max_poly_degree = std::max(out.max_poly_degree, one.max_poly_degree);
    }
    if (!bads.empty())
        out.bad_word = [bads](const Word& w) {
            for (auto& b : bads)
                if (b(w)) return true;
            return false;
        };
    return out;
}

// The listed generator family of a spec: polynomial generators of every
// summand, then the minimal monomial generators of degree <= max_degree
// (bad words all of whose proper contiguous subwords are good).
template <class K>
std::vector<NcPoly<K>> generators(const IdealSpec& spec, int max_degree)
{
    std::vector<NcPoly<K>> out;
    for (auto& p : spec.parts) {
        GenSet<K> one = generator_set<K>(p, spec.N);
        for (auto& f : one.polys)
            if (f.degree() <= max_degree) out.push_back(f);
        if (one.bad_word) {
            for (int d = 1; d <= max_degree; ++d)
                for (auto& w : all_words(spec.N, d)) {
                    if (!one.bad_word(w)) continue;
                    bool minimal = true;
                    for (size_t from = 0; from < w.size() && minimal; ++from)
                        for (size_t len = 1; len < w.size() - (from ? 1 : 0) && minimal; ++len) {
                            if (from + len > w.size()) break;
                            if (from == 0 && len == w.size()) continue;
                            if (one.bad_word(w.subword(from, len))) minimal = false;
                        }
                    if (minimal) out.push_back(NcPoly<K>::monomial(w));
                }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Degree-graded bases

template <class K>
struct DegreeBasis {
    std::string spec_text;
    int N = 0;
    int degree = 0;
    std::optional<std::vector<uint8_t>> content; // repeat-free block when set
    std::vector<Word> cols;                      // canonical column order
    Echelon<K> ech;

    size_t rank() const { return ech.rank(); }

    uint32_t col_of(const Word& w) const
    {
        auto it = std::lower_bound(cols.begin(), cols.end(), w);
        if (it == cols.end() || !(*it == w))
            throw std::invalid_argument("word outside basis coordinate block: " + w.str());
        return static_cast<uint32_t>(it - cols.begin());
    }

    SparseVec<K> to_vec(const NcPoly<K>& f) const
    {
        SparseVec<K> v;
        for (auto& [w, c] : f.terms()) v.e.emplace_back(col_of(w), c);
        v.sort_and_compress();
        return v;
    }
    NcPoly<K> to_poly(const SparseVec<K>& v) const
    {
        NcPoly<K> f;
        for (auto& [c, val] : v.e) f.add_term(cols[c], val);
        return f;
    }

    // Unique normal form of f modulo the row span.
    NcPoly<K> reduce(const NcPoly<K>& f) const
    {
        if (f.is_zero()) return f;
        if (!f.is_homogeneous() || f.degree() != degree)
            throw std::invalid_argument("reduce: degree mismatch");
        SparseVec<K> v = to_vec(f);
        ech.reduce(v);
        return to_poly(v);
    }
};

namespace detail {

// Enumerate pad pairs (v, w) of total length m over {1..N} and call f(v, w).
inline void for_each_pad(int N, int m, const std::function<void(const Word&, const Word&)>& f)
{
    for (int lv = 0; lv <= m; ++lv) {
        auto vs = all_words(N, lv);
        auto ws = all_words(N, m - lv);
        for (auto& v : vs)
            for (auto& w : ws) f(v, w);
    }
}

template <class K>
void content_soundness_check(const GenSet<K>& gens, const std::vector<uint8_t>& content)
{
    for (auto& g : gens.polys) {
        std::optional<std::vector<uint8_t>> first;
        for (auto& [w, c] : g.terms()) {
            if (w.has_repeated_letter()) continue;
            auto ct = w.content();
            if (!first) first = ct;
            else if (*first != ct)
                throw std::runtime_error(
                    "content restriction unsound: generator mixes letter content");
        }
    }
    if (gens.bad_word) {
        // monomial parts must vanish on repeat-free words
        Word probe{std::vector<uint8_t>(content)};
        if (!probe.has_repeated_letter() && gens.bad_word(probe)) {
            // conservative: scan all arrangements
            std::vector<uint8_t> perm(content);
            do {
                if (gens.bad_word(Word{std::vector<uint8_t>(perm)}))
                    throw std::runtime_error(
                        "content restriction unsound: monomial part hits repeat-free words");
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

} // namespace detail

template <class K>
std::shared_ptr<const DegreeBasis<K>> build_degree_basis(
    const std::vector<NcPoly<K>>& polys, const std::function<bool(const Word&)>& bad_word,
    int N, int d, const std::optional<std::vector<uint8_t>>& content,
    const std::string& spec_text)
{
    auto basis = std::make_shared<DegreeBasis<K>>();
    basis->spec_text = spec_text;
    basis->N = N;
    basis->degree = d;
    basis->content = content;

    if (content) {
        if (static_cast<int>(content->size()) != d)
            throw std::invalid_argument("content class size must equal degree");
        std::vector<uint8_t> perm(*content);
        std::sort(perm.begin(), perm.end());
        for (size_t i = 0; i + 1 < perm.size(); ++i)
            if (perm[i] == perm[i + 1])
                throw std::invalid_argument("content class must be repeat-free");
        do basis->cols.push_back(Word{std::vector<uint8_t>(perm)});
        while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        basis->cols = all_words(N, d);
    }

    auto add_row = [&](const NcPoly<K>& padded) {
        SparseVec<K> v;
        for (auto& [w, c] : padded.terms()) {
            if (content) {
                if (w.has_repeated_letter()) continue;
                if (w.content() != *content) continue;
            }
            v.e.emplace_back(basis->col_of(w), c);
        }
        v.sort_and_compress();
        if (!v.empty()) basis->ech.insert(std::move(v));
    };

    for (auto& g : polys) {
        int e = g.degree();
        if (e > d) continue;
        if (content) {
            // pads draw from the complement of the generator's block content
            std::vector<uint8_t> need;
            bool has_block_term = false;
            for (auto& [w, c] : g.terms()) {
                if (w.has_repeated_letter()) continue;
                auto ct = w.content();
                std::vector<uint8_t> diff;
                std::set_difference(content->begin(), content->end(), ct.begin(), ct.end(),
                                    std::back_inserter(diff));
                std::vector<uint8_t> check;
                std::set_difference(ct.begin(), ct.end(), content->begin(), content->end(),
                                    std::back_inserter(check));
                if (!check.empty()) continue; // generator letters outside the block
                has_block_term = true;
                need = diff;
                break;
            }
            if (!has_block_term || static_cast<int>(need.size()) != d - e) continue;
            std::sort(need.begin(), need.end());
            do {
                Word arr{std::vector<uint8_t>(need)};
                for (int lv = 0; lv <= d - e; ++lv) {
                    NcPoly<K> padded = NcPoly<K>::monomial(arr.subword(0, lv)) * g *
                                       NcPoly<K>::monomial(arr.subword(lv, d - e - lv));
                    add_row(padded);
                }
            } while (std::next_permutation(need.begin(), need.end()));
        } else {
            detail::for_each_pad(N, d - e, [&](const Word& v, const Word& w) {
                add_row(NcPoly<K>::monomial(v) * g * NcPoly<K>::monomial(w));
            });
        }
    }
    if (bad_word) {
        for (auto& w : basis->cols) {
            if (!bad_word(w)) continue;
            SparseVec<K> v;
            v.e.emplace_back(basis->col_of(w), K(1));
            basis->ech.insert(std::move(v));
        }
        if (!content) {
            // nothing more: cols covers every word of this degree
        }
    }
    return basis;
}

// Cache of frozen degree bases, keyed by (spec, degree, restriction).
template <class K>
class BasisCache {
public:
    static BasisCache& instance()
    {
        static BasisCache c;
        return c;
    }

    std::shared_ptr<const DegreeBasis<K>> get(const IdealSpec& spec, int d,
                                              const std::optional<std::vector<uint8_t>>& content)
    {
        std::string key = spec.str() + "@N" + std::to_string(spec.N) + "@d" + std::to_string(d);
        if (content) {
            key += "@c";
            for (auto x : *content) key += std::to_string(int(x)) + ".";
        }
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        GenSet<K> gens = generator_set<K>(spec);
        if (content) detail::content_soundness_check(gens, *content);
        auto basis =
            build_degree_basis<K>(gens.polys, gens.bad_word, spec.N, d, content, spec.str());
        std::lock_guard<std::mutex> lk(mu_);
        auto [it, fresh] = cache_.emplace(key, basis);
        return it->second;
    }

private:
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const DegreeBasis<K>>> cache_;
};

template <class K>
std::shared_ptr<const DegreeBasis<K>> degree_basis(
    const IdealSpec& spec, int d,
    const std::optional<std::vector<uint8_t>>& content = std::nullopt)
{
    return BasisCache<K>::instance().get(spec, d, content);
}

// ---------------------------------------------------------------------------
// Congruence and perp

template <class K>
bool spec_kills_repeats(const IdealSpec& spec)
{
    for (auto& p : spec.parts)
        if (p.family == Family::Ist) return true;
    return false;
}

// reduce(f - g) = 0, choosing restricted blocks when the spec contains Ist.
template <class K>
bool congruent(const NcPoly<K>& f, const NcPoly<K>& g, const IdealSpec& spec)
{
    NcPoly<K> h = f - g;
    if (h.is_zero()) return true;
    if (!h.is_homogeneous()) throw std::invalid_argument("inhomogeneous difference");
    int d = h.degree();
    if (spec_kills_repeats<K>(spec)) {
        // split by content block; repeated-letter words die in the quotient
        std::map<std::vector<uint8_t>, NcPoly<K>> blocks;
        for (auto& [w, c] : h.terms()) {
            if (w.has_repeated_letter()) continue;
            blocks[w.content()].add_term(w, c);
        }
        for (auto& [ct, part] : blocks) {
            auto basis = degree_basis<K>(spec, d, ct);
            if (!basis->reduce(part).is_zero()) return false;
        }
        return true;
    }
    auto basis = degree_basis<K>(spec, d);
    return basis->reduce(h).is_zero();
}

template <class K>
NcPoly<K> reduce_mod(const NcPoly<K>& f, const IdealSpec& spec)
{
    if (f.is_zero()) return f;
    if (!f.is_homogeneous()) throw std::invalid_argument("inhomogeneous input");
    int d = f.degree();
    if (spec_kills_repeats<K>(spec)) {
        NcPoly<K> out;
        std::map<std::vector<uint8_t>, NcPoly<K>> blocks;
        for (auto& [w, c] : f.terms()) {
            if (w.has_repeated_letter()) continue;
            blocks[w.content()].add_term(w, c);
        }
        for (auto& [ct, part] : blocks) {
            auto basis = degree_basis<K>(spec, d, ct);
            out += basis->reduce(part);
        }
        return out;
    }
    return degree_basis<K>(spec, d)->reduce(f);
}

// Support-driven perp test: gamma pairs to zero with every element
// u_v g u_w of the degree-d spanning set iff it does so for the rows whose
// support meets supp(gamma).
template <class K>
bool in_perp(const NcPoly<K>& gamma, const IdealSpec& spec, NcPoly<K>* witness_out = nullptr)
{
    if (gamma.is_zero()) return true;
    if (!gamma.is_homogeneous()) throw std::invalid_argument("mixed-degree dual vector");
    GenSet<K> gens = generator_set<K>(spec);
    if (gens.bad_word) {
        for (auto& [x, cx] : gamma.terms())
            if (gens.bad_word(x)) {
                if (witness_out) *witness_out = NcPoly<K>::monomial(x);
                return false;
            }
    }
    std::set<std::string> seen;
    for (auto& [x, cx] : gamma.terms()) {
        for (size_t gi = 0; gi < gens.polys.size(); ++gi) {
            const auto& g = gens.polys[gi];
            size_t e = static_cast<size_t>(g.degree());
            if (e > x.size()) continue;
            for (size_t i = 0; i + e <= x.size(); ++i) {
                Word window = x.subword(i, e);
                if (ncsf::is_zero(g.coeff(window))) continue;
                Word v = x.subword(0, i);
                Word w = x.subword(i + e, x.size() - i - e);
                std::string key =
                    std::to_string(gi) + "|" + v.str() + "|" + w.str();
                if (!seen.insert(key).second) continue;
                K acc(0);
                for (auto& [t, ct] : g.terms()) acc += ct * gamma.coeff(v * t * w);
                if (!ncsf::is_zero(acc)) {
                    if (witness_out)
                        *witness_out = NcPoly<K>::monomial(v) * g * NcPoly<K>::monomial(w);
                    return false;
                }
            }
        }
    }
    return true;
}

// Every generator of inner reduces to zero modulo outer, degree <= dmax.
inline bool contains(const IdealSpec& outer, const IdealSpec& inner, int dmax)
{
    if (outer.N != inner.N) throw std::invalid_argument("alphabet mismatch");
    if (inner.uses_q_ring() && !outer.uses_q_ring())
        throw std::invalid_argument("cannot test a q-ideal inside an integer ideal");
    if (outer.uses_q_ring()) {
        std::vector<NcPolyF> gens;
        if (inner.uses_q_ring()) gens = generators<QFrac>(inner, dmax);
        else
            for (auto& f : generators<Rat>(inner, dmax)) gens.push_back(to_qfield(f));
        for (auto& f : gens)
            if (!congruent<QFrac>(f, NcPolyF(), outer)) return false;
        return true;
    }
    for (auto& f : generators<Rat>(inner, dmax))
        if (!congruent<Rat>(f, NcPolyQ(), outer)) return false;
    return true;
}

// Echelon basis of the intersection of degree-d components, computed as the
// perp of the sum of the individual perps.
template <class K>
std::shared_ptr<const DegreeBasis<K>> intersect_degree(
    const std::vector<IdealSpec>& specs, int d,
    const std::optional<std::vector<uint8_t>>& content = std::nullopt)
{
    if (specs.empty()) throw std::invalid_argument("empty intersection");
    auto first = degree_basis<K>(specs[0], d, content);
    if (specs.size() == 1) return first;

    uint32_t ncols = static_cast<uint32_t>(first->cols.size());
    Echelon<K> perp_sum;
    for (auto& s : specs) {
        auto b = degree_basis<K>(s, d, content);
        Echelon<K> ech = b->ech; // copy: nullspace() reduces in place
        for (auto& v : ech.nullspace(ncols)) perp_sum.insert(std::move(v));
    }
    auto basis = std::make_shared<DegreeBasis<K>>();
    basis->spec_text = "cap(...)";
    basis->N = specs[0].N;
    basis->degree = d;
    basis->content = content;
    basis->cols = first->cols;
    for (auto& v : perp_sum.nullspace(ncols)) basis->ech.insert(std::move(v));
    return basis;
}

// ---------------------------------------------------------------------------
// Spec text grammar: family names with ":k" parameters, "+" for sums,
// "cap(...)" for intersections; "Iassaf:1..5+Ist" expands the range inside
// a cap.  "IFG" abbreviates IB+IS.

namespace detail {
inline std::string strip_spaces(const std::string& s)
{
    std::string r;
    for (char c : s)
        if (c != ' ') r += c;
    return r;
}
} // namespace detail

inline IdealSpec parse_ideal_spec(const std::string& text, int N)
{
    std::string s = detail::strip_spaces(text);
    IdealSpec out;
    out.N = N;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t e = s.find('+', pos);
        if (e == std::string::npos) e = s.size();
        std::string tok = s.substr(pos, e - pos);
        std::string name = tok, param;
        if (auto colon = tok.find(':'); colon != std::string::npos) {
            name = tok.substr(0, colon);
            param = tok.substr(colon + 1);
        }
        IdealPrim p;
        if (name == "IC") p.family = Family::IC;
        else if (name == "IB") p.family = Family::IB;
        else if (name == "IS") p.family = Family::IS;
        else if (name == "Iplac") p.family = Family::Iplac;
        else if (name == "Inplac") p.family = Family::Inplac;
        else if (name == "InCox") p.family = Family::InCox;
        else if (name == "IH") p.family = Family::IH;
        else if (name == "Ist") p.family = Family::Ist;
        else if (name == "Iaba") p.family = Family::Iaba;
        else if (name == "Iassaf") p.family = Family::Iassaf;
        else if (name == "JlamQ") p.family = Family::JlamQ;
        else if (name == "IlamLE") p.family = Family::IlamLE;
        else if (name == "IFG") {
            IdealPrim b;
            b.family = Family::IB;
            out.parts.push_back(b);
            p.family = Family::IS;
        } else if (name == "Triples") {
            p.family = Family::Triples;
            if (param.rfind("rot=", 0) != 0)
                throw std::invalid_argument("Triples expects rot=<abc>|<abc>|...");
            std::string list = param.substr(4);
            size_t q = 0;
            while (q < list.size()) {
                size_t e2 = list.find('|', q);
                if (e2 == std::string::npos) e2 = list.size();
                std::string t = list.substr(q, e2 - q);
                if (t.size() != 3) throw std::invalid_argument("triple must be 3 digits: " + t);
                std::array<int, 3> tr{t[0] - '0', t[1] - '0', t[2] - '0'};
                p.triples[tr] = TripleKind::Rotation;
                q = e2 + 1;
            }
            param.clear();
        } else throw std::invalid_argument("unknown ideal family: " + name);
        if (!param.empty()) {
            p.k = std::stoi(param);
            if (p.k < 1) throw std::invalid_argument("family parameter must be >= 1");
        } else if (p.family == Family::Iaba || p.family == Family::Iassaf ||
                   p.family == Family::JlamQ || p.family == Family::IlamLE) {
            throw std::invalid_argument(name + " requires a :k parameter");
        }
        out.parts.push_back(std::move(p));
        pos = e + 1;
    }
    if (out.parts.empty()) throw std::invalid_argument("empty ideal spec");
    return out;
}

// "cap(...)" with optional "k1..k2" range expansion; a bare spec parses as a
// one-element list.
inline std::vector<IdealSpec> parse_ideal_caps(const std::string& text, int N)
{
    std::string s = detail::strip_spaces(text);
    if (s.rfind("cap(", 0) != 0) return {parse_ideal_spec(s, N)};
    if (s.back() != ')') throw std::invalid_argument("unbalanced cap(...)");
    std::string inner = s.substr(4, s.size() - 5);
    std::vector<std::string> items;
    size_t pos = 0;
    while (pos <= inner.size()) {
        size_t e = inner.find(',', pos);
        if (e == std::string::npos) e = inner.size();
        items.push_back(inner.substr(pos, e - pos));
        if (e == inner.size()) break;
        pos = e + 1;
    }
    std::vector<IdealSpec> out;
    for (auto& item : items) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_ideal_spec(item, N));
            continue;
        }
        size_t lo_start = dots;
        while (lo_start > 0 && isdigit(static_cast<unsigned char>(item[lo_start - 1]))) lo_start--;
        size_t hi_end = dots + 2;
        while (hi_end < item.size() && isdigit(static_cast<unsigned char>(item[hi_end]))) hi_end++;
        int lo = std::stoi(item.substr(lo_start, dots - lo_start));
        int hi = std::stoi(item.substr(dots + 2, hi_end - dots - 2));
        for (int k = lo; k <= hi; ++k)
            out.push_back(parse_ideal_spec(
                item.substr(0, lo_start) + std::to_string(k) + item.substr(hi_end), N));
    }
    if (out.empty()) throw std::invalid_argument("empty cap(...)");
    return out;
}

// Rank equality plus one-way row containment: equal spans.
template <class K>
bool spans_equal(const DegreeBasis<K>& a, const DegreeBasis<K>& b)
{
    if (a.rank() != b.rank()) return false;
    if (a.cols.size() != b.cols.size()) return false;
    for (auto& [pivot, row] : b.ech.rows()) {
        SparseVec<K> copy = row;
        if (!a.ech.reduces_to_zero(std::move(copy))) return false;
    }
    return true;
}

// e_k(u_S) e_l(u_S) == e_l(u_S) e_k(u_S) mod spec, for all S and all k < l
// with k + l <= dmax.  The reducer argument lets callers swap in custom
// generator sets.
inline bool commutation_suite_with(
    int N, int dmax, const std::function<bool(const NcPolyQ&, int)>& reduces_to_zero)
{
    int total = 1 << N;
    for (int mask = 1; mask < total; ++mask) {
        std::vector<int> s;
        for (int i = 0; i < N; ++i)
            if (mask & (1 << i)) s.push_back(i + 1);
        int m = static_cast<int>(s.size());
        for (int k = 1; k <= m; ++k)
            for (int l = k + 1; l <= m && k + l <= dmax; ++l) {
                NcPolyQ ek = elementary(k, s), el = elementary(l, s);
                NcPolyQ comm = ek * el - el * ek;
                if (comm.is_zero()) continue;
                if (!reduces_to_zero(comm, k + l)) return false;
            }
    }
    return true;
}

inline bool commutation_suite(const IdealSpec& spec, int N, int dmax)
{
    return commutation_suite_with(N, dmax, [&](const NcPolyQ& comm, int) {
        return congruent<Rat>(comm, NcPolyQ(), spec);
    });
}

} // namespace ncsf
