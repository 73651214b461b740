#pragma once

#include <ncsf/ideal.hpp>
#include <ncsf/qsym.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncsf {

enum class SwitchType { Knuth, Rotation, BraidIdempotent };

// Partner window of a 3-letter window under each pattern family.
// Windows that carry no lone descent have no partner.
namespace detail {

inline std::optional<Word> knuth_partner(const Word& x)
{
    int p = x[0], q = x[1], r = x[2];
    std::set<int> dist{p, q, r};
    if (dist.size() == 3) {
        std::vector<int> s(dist.begin(), dist.end());
        int a = s[0], b = s[1], c = s[2];
        if (p == b && q == a && r == c) return detail::w3(b, c, a); // bac -> bca
        if (p == b && q == c && r == a) return detail::w3(b, a, c); // bca -> bac
        if (p == a && q == c && r == b) return detail::w3(c, a, b); // acb -> cab
        if (p == c && q == a && r == b) return detail::w3(a, c, b); // cab -> acb
        return std::nullopt;
    }
    if (dist.size() == 2) {
        int a = *dist.begin(), b = *dist.rbegin();
        if (p == a && q == b && r == a) return detail::w3(b, a, a); // aba -> baa
        if (p == b && q == a && r == a) return detail::w3(a, b, a); // baa -> aba
        if (p == b && q == a && r == b) return detail::w3(b, b, a); // bab -> bba
        if (p == b && q == b && r == a) return detail::w3(b, a, b); // bba -> bab
    }
    return std::nullopt;
}

inline std::optional<Word> rotation_partner(const Word& x)
{
    int p = x[0], q = x[1], r = x[2];
    std::set<int> dist{p, q, r};
    if (dist.size() != 3) return std::nullopt;
    std::vector<int> s(dist.begin(), dist.end());
    int a = s[0], b = s[1], c = s[2];
    if (p == b && q == a && r == c) return detail::w3(a, c, b); // bac -> acb
    if (p == a && q == c && r == b) return detail::w3(b, a, c); // acb -> bac
    if (p == b && q == c && r == a) return detail::w3(c, a, b); // bca -> cab
    if (p == c && q == a && r == b) return detail::w3(b, c, a); // cab -> bca
    return std::nullopt;
}

inline std::optional<Word> braid_partner(const Word& x) // b = a+1 required
{
    int p = x[0], q = x[1], r = x[2];
    std::set<int> dist{p, q, r};
    if (dist.size() != 2) return std::nullopt;
    int a = *dist.begin(), b = *dist.rbegin();
    if (b != a + 1) return std::nullopt;
    if (p == a && q == b && r == a) return detail::w3(b, a, b); // aba -> bab
    if (p == b && q == a && r == b) return detail::w3(a, b, a); // bab -> aba
    if (p == b && q == a && r == a) return detail::w3(b, b, a); // baa -> bba
    if (p == b && q == b && r == a) return detail::w3(b, a, a); // bba -> baa
    return std::nullopt;
}

} // namespace detail

// The type of the switch relating w and w2 at position i (1-based,
// 2 <= i <= n-1), or nullopt when they are not so related.
inline std::optional<SwitchType> classify_switch(const Word& w, const Word& w2, int i)
{
    if (w.size() != w2.size()) return std::nullopt;
    int n = static_cast<int>(w.size());
    if (i < 2 || i > n - 1) return std::nullopt;
    for (int j = 0; j < n; ++j) {
        if (j >= i - 2 && j <= i) continue;
        if (w[j] != w2[j]) return std::nullopt;
    }
    Word x = w.subword(i - 2, 3), y = w2.subword(i - 2, 3);
    if (x == y) return std::nullopt;
    if (auto p = detail::knuth_partner(x); p && *p == y) return SwitchType::Knuth;
    if (auto p = detail::rotation_partner(x); p && *p == y) return SwitchType::Rotation;
    if (auto p = detail::braid_partner(x); p && *p == y) return SwitchType::BraidIdempotent;
    return std::nullopt;
}

struct SwitchboardEdge {
    int label;
    Word a, b; // a < b

    SwitchboardEdge(int i, Word x, Word y) : label(i)
    {
        if (y < x) std::swap(x, y);
        a = std::move(x);
        b = std::move(y);
    }
    friend bool operator<(const SwitchboardEdge& l, const SwitchboardEdge& r)
    {
        if (l.label != r.label) return l.label < r.label;
        if (!(l.a == r.a)) return l.a < r.a;
        return l.b < r.b;
    }
    friend bool operator==(const SwitchboardEdge& l, const SwitchboardEdge& r)
    {
        return l.label == r.label && l.a == r.a && l.b == r.b;
    }
};

class Switchboard {
public:
    Switchboard() = default;
    Switchboard(std::set<Word> vertices, std::set<SwitchboardEdge> edges)
        : v_(std::move(vertices)), e_(std::move(edges))
    {
    }

    const std::set<Word>& vertices() const { return v_; }
    const std::set<SwitchboardEdge>& edges() const { return e_; }
    int word_length() const { return v_.empty() ? 0 : static_cast<int>(v_.begin()->size()); }

    void add_vertex(Word w) { v_.insert(std::move(w)); }
    void add_edge(int i, const Word& x, const Word& y)
    {
        v_.insert(x);
        v_.insert(y);
        e_.insert(SwitchboardEdge(i, x, y));
    }

    std::vector<SwitchboardEdge> incident(const Word& w, int label) const
    {
        std::vector<SwitchboardEdge> out;
        for (auto& e : e_)
            if (e.label == label && (e.a == w || e.b == w)) out.push_back(e);
        return out;
    }

    NcPolyQ vertex_sum() const
    {
        NcPolyQ g;
        for (auto& w : v_) g.add_term(w, 1);
        return g;
    }

    FundExpansion<Rat> symfunc() const { return fund_from_dual(vertex_sum()); }

    // "v <word>" and "e <i> <w1> <w2>" lines; '#' starts a comment.
    static Switchboard parse(const std::string& text)
    {
        Switchboard b;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            lineno++;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            std::string tag;
            if (!(ls >> tag)) continue;
            if (tag == "v") {
                std::string w;
                if (!(ls >> w))
                    throw std::invalid_argument("line " + std::to_string(lineno) + ": v needs a word");
                b.add_vertex(Word::parse(w));
            } else if (tag == "e") {
                int i;
                std::string x, y;
                if (!(ls >> i >> x >> y))
                    throw std::invalid_argument("line " + std::to_string(lineno) +
                                                ": e needs <i> <w1> <w2>");
                b.add_edge(i, Word::parse(x), Word::parse(y));
            } else {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown tag " + tag);
            }
        }
        return b;
    }

    std::string str() const
    {
        std::ostringstream os;
        for (auto& w : v_) os << "v " << w.str() << "\n";
        for (auto& e : e_) os << "e " << e.label << " " << e.a.str() << " " << e.b.str() << "\n";
        return os.str();
    }

private:
    std::set<Word> v_;
    std::set<SwitchboardEdge> e_;
};

// Pattern families a position may use, derived from a semimatched spec.
struct SwitchRules {
    std::function<std::pair<bool, bool>(int, int, int)> triple; // (knuth, rotation)
    std::function<std::pair<bool, bool>(int)> pair12;           // b=a+1: (knuth, braid)
    std::function<bool(const Word&)> vertex_ok;                 // complement of I_M
};

inline SwitchRules switch_rules(const IdealSpec& spec)
{
    bool knuth_t = true, rot_t = true, knuth_p = true, braid_p = true;
    std::vector<std::function<bool(const Word&)>> vetoes;
    std::optional<IdealPrim> custom;
    bool assaf_like = false;
    int assaf_k = 0;
    for (auto& p : spec.parts) {
        switch (p.family) {
        case Family::IS: break;
        case Family::IB: rot_t = false; break; // IB enters sums as IFG = IB+IS
        case Family::Iplac:
            rot_t = false;
            braid_p = false;
            break;
        case Family::IH:
            rot_t = false;
            knuth_p = false;
            break;
        case Family::Inplac:
            rot_t = false;
            knuth_p = false;
            vetoes.push_back([](const Word& w) {
                for (size_t i = 0; i + 1 < w.size(); ++i)
                    if (w[i] == w[i + 1]) return true;
                for (size_t i = 0; i + 2 < w.size(); ++i)
                    if (w[i] == w[i + 2] && std::abs(int(w[i]) - int(w[i + 1])) >= 2) return true;
                return false;
            });
            break;
        case Family::Iaba:
            assaf_like = true;
            assaf_k = p.k;
            vetoes.push_back([](const Word& w) {
                for (size_t i = 0; i + 1 < w.size(); ++i)
                    if (w[i] == w[i + 1]) return true;
                for (size_t i = 0; i + 2 < w.size(); ++i)
                    if (w[i] == w[i + 2]) return true;
                return false;
            });
            break;
        case Family::Iassaf:
            assaf_like = true;
            assaf_k = p.k;
            vetoes.push_back([k = p.k](const Word& w) { return !nonzero_k_word(w, k); });
            break;
        case Family::Ist:
            vetoes.push_back([](const Word& w) { return w.has_repeated_letter(); });
            break;
        case Family::Triples:
        case Family::Semimatched:
            custom = p;
            if (!p.extra_monomials.empty()) {
                GenSet<Rat> gs = generator_set<Rat>(p, spec.N);
                vetoes.push_back(gs.bad_word);
            }
            break;
        default:
            throw std::invalid_argument("not a semimatched ideal family: " + p.str());
        }
    }
    SwitchRules r;
    if (custom) {
        IdealPrim p = *custom;
        r.triple = [p](int a, int b, int c) {
            switch (detail::classify_triple(p, a, b, c)) {
            case TripleKind::Knuth: return std::make_pair(true, false);
            case TripleKind::Rotation: return std::make_pair(false, true);
            default: return std::make_pair(true, true);
            }
        };
        r.pair12 = [p](int a) {
            switch (detail::classify_pair(p, a)) {
            case PairKind::Knuth: return std::make_pair(true, false);
            case PairKind::Braid: return std::make_pair(false, true);
            default: return std::make_pair(true, true);
            }
        };
    } else if (assaf_like) {
        r.triple = [assaf_k](int a, int, int c) {
            return c - a > assaf_k ? std::make_pair(true, false) : std::make_pair(false, true);
        };
        r.pair12 = [](int) { return std::make_pair(true, false); };
    } else {
        r.triple = [knuth_t, rot_t](int, int, int) { return std::make_pair(knuth_t, rot_t); };
        r.pair12 = [knuth_p, braid_p](int) { return std::make_pair(knuth_p, braid_p); };
    }
    r.vertex_ok = [vetoes](const Word& w) {
        for (auto& v : vetoes)
            if (v(w)) return false;
        return true;
    };
    return r;
}

namespace detail {

inline bool edge_allowed(const SwitchRules& rules, const Word& x, const Word& y)
{
    std::set<int> dist;
    for (int j = 0; j < 3; ++j) dist.insert(x[j]);
    if (dist.size() == 3) {
        std::vector<int> s(dist.begin(), dist.end());
        auto [kn, rot] = rules.triple(s[0], s[1], s[2]);
        if (auto p = knuth_partner(x); p && *p == y) return kn;
        if (auto p = rotation_partner(x); p && *p == y) return rot;
        return false;
    }
    int a = *dist.begin(), b = *dist.rbegin();
    if (auto p = knuth_partner(x); p && *p == y)
        return b - a >= 2 ? true : rules.pair12(a).first;
    if (auto p = braid_partner(x); p && *p == y) return rules.pair12(a).second;
    return false;
}

} // namespace detail

// Base switchboard validity: uniform word length, labels in range, every
// edge a genuine switch, and every vertex with exactly one descent among
// positions {i-1, i} in exactly one i-edge.
inline bool validate_plain(const Switchboard& b, std::string* why = nullptr)
{
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int n = b.word_length();
    for (auto& w : b.vertices())
        if (static_cast<int>(w.size()) != n) return fail("vertex lengths differ");
    for (auto& e : b.edges()) {
        if (e.label < 2 || e.label > n - 1) return fail("edge label out of range");
        if (!classify_switch(e.a, e.b, e.label))
            return fail("edge " + std::to_string(e.label) + " " + e.a.str() + " " + e.b.str() +
                        " is not a switch");
        if (!b.vertices().count(e.a) || !b.vertices().count(e.b))
            return fail("edge endpoint missing from vertex set");
    }
    for (auto& w : b.vertices()) {
        auto des = w.descent_set();
        for (int i = 2; i <= n - 1; ++i) {
            int cnt = static_cast<int>(des.count(i - 1)) + static_cast<int>(des.count(i));
            size_t deg = b.incident(w, i).size();
            if (cnt == 1 && deg != 1)
                return fail("vertex " + w.str() + " has " + std::to_string(deg) + " " +
                            std::to_string(i) + "-edges");
            if (cnt != 1 && deg != 0)
                return fail("vertex " + w.str() + " has a spurious " + std::to_string(i) + "-edge");
        }
    }
    return true;
}

inline bool validate_rotation_free(const Switchboard& b, std::string* why = nullptr)
{
    if (!validate_plain(b, why)) return false;
    for (auto& e : b.edges())
        if (classify_switch(e.a, e.b, e.label) == SwitchType::Rotation) {
            if (why) *why = "rotation switch present";
            return false;
        }
    return true;
}

inline bool validate_d0(const Switchboard& b, std::string* why = nullptr)
{
    if (!validate_plain(b, why)) return false;
    for (auto& w : b.vertices())
        if (w.has_repeated_letter()) {
            if (why) *why = "vertex " + w.str() + " repeats a letter";
            return false;
        }
    return true;
}

inline bool validate_semimatched(const Switchboard& b, const IdealSpec& spec,
                                 std::string* why = nullptr)
{
    if (!validate_plain(b, why)) return false;
    SwitchRules rules = switch_rules(spec);
    for (auto& w : b.vertices())
        if (!rules.vertex_ok(w)) {
            if (why) *why = "vertex " + w.str() + " lies in the monomial ideal";
            return false;
        }
    for (auto& e : b.edges()) {
        Word x = e.a.subword(e.label - 2, 3), y = e.b.subword(e.label - 2, 3);
        if (!detail::edge_allowed(rules, x, y)) {
            if (why)
                *why = "edge " + std::to_string(e.label) + " " + e.a.str() + " " + e.b.str() +
                       " uses a forbidden pattern";
            return false;
        }
    }
    return true;
}

struct PerpViolation : std::runtime_error {
    NcPolyQ witness;
    explicit PerpViolation(NcPolyQ w)
        : std::runtime_error("vertex sum is not in the ideal's perp"), witness(std::move(w))
    {
    }
};

// Unique I-switchboard on the given vertices for a fully decided
// semimatched spec; edges are derived, never trusted from input.
inline Switchboard build_unique(const std::set<Word>& vertices, const IdealSpec& spec)
{
    SwitchRules rules = switch_rules(spec);
    NcPolyQ gamma;
    for (auto& w : vertices) gamma.add_term(w, 1);
    NcPolyQ witness;
    if (!in_perp<Rat>(gamma, spec, &witness)) throw PerpViolation(std::move(witness));

    Switchboard b;
    for (auto& w : vertices) b.add_vertex(w);
    int n = vertices.empty() ? 0 : static_cast<int>(vertices.begin()->size());
    for (auto& w : vertices) {
        auto des = w.descent_set();
        for (int i = 2; i <= n - 1; ++i) {
            int cnt = static_cast<int>(des.count(i - 1)) + static_cast<int>(des.count(i));
            if (cnt != 1) continue;
            Word x = w.subword(i - 2, 3);
            std::vector<Word> partners;
            for (auto partner : {detail::knuth_partner(x), detail::rotation_partner(x),
                                 detail::braid_partner(x)}) {
                if (!partner) continue;
                if (!detail::edge_allowed(rules, x, *partner)) continue;
                std::vector<uint8_t> cand(w.letters());
                for (int j = 0; j < 3; ++j) cand[i - 2 + j] = (*partner)[j];
                Word cw(std::move(cand));
                if (vertices.count(cw)) partners.push_back(std::move(cw));
            }
            if (partners.empty())
                throw std::runtime_error("no partner for " + w.str() + " at position " +
                                         std::to_string(i));
            if (partners.size() > 1)
                throw std::runtime_error("ambiguous switch for " + w.str() + " at position " +
                                         std::to_string(i) + " (spec leaves patterns undecided)");
            b.add_edge(i, w, partners[0]);
        }
    }
    std::string why;
    if (!validate_semimatched(b, spec, &why))
        throw std::runtime_error("derived board fails validation: " + why);
    return b;
}

// Connected components of the edge graph; isolated vertices count.
inline std::vector<Switchboard> components(const Switchboard& b)
{
    std::map<Word, int> comp;
    int next = 0;
    for (auto& w : b.vertices()) comp[w] = next++;
    // union-find
    std::vector<int> parent(next);
    for (int i = 0; i < next; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& e : b.edges()) {
        int ra = find(comp[e.a]), rb = find(comp[e.b]);
        if (ra != rb) parent[ra] = rb;
    }
    std::map<int, Switchboard> out;
    for (auto& w : b.vertices()) out[find(comp[w])].add_vertex(w);
    for (auto& e : b.edges()) out[find(comp[e.a])].add_edge(e.label, e.a, e.b);
    std::vector<Switchboard> list;
    for (auto& [root, board] : out) list.push_back(std::move(board));
    return list;
}

struct Axiom5Violation {
    Word v;
    int i, j;
    friend bool operator<(const Axiom5Violation& a, const Axiom5Violation& b)
    {
        if (!(a.v == b.v)) return a.v < b.v;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Non-overlapping switches commute: an i-edge {v,w} and j-edge {v,w'}
// with |i-j| >= 3 must close into a square.
inline std::vector<Axiom5Violation> check_axiom5(const Switchboard& b)
{
    std::vector<Axiom5Violation> out;
    int n = b.word_length();
    for (auto& v : b.vertices()) {
        for (int i = 2; i <= n - 1; ++i) {
            auto ei = b.incident(v, i);
            if (ei.empty()) continue;
            for (int j = i + 3; j <= n - 1; ++j) {
                auto ej = b.incident(v, j);
                if (ej.empty()) continue;
                for (auto& e1 : ei)
                    for (auto& e2 : ej) {
                        Word w = (e1.a == v) ? e1.b : e1.a;
                        Word w2 = (e2.a == v) ? e2.b : e2.a;
                        bool closed = false;
                        for (auto& f : b.incident(w, j)) {
                            Word vp = (f.a == w) ? f.b : f.a;
                            for (auto& g : b.incident(w2, i)) {
                                Word vq = (g.a == w2) ? g.b : g.a;
                                if (vp == vq) closed = true;
                            }
                        }
                        if (!closed) out.push_back({v, i, j});
                    }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct LocalityViolation {
    int i;
    Word v, w;
    friend bool operator<(const LocalityViolation& a, const LocalityViolation& b)
    {
        if (a.i != b.i) return a.i < b.i;
        if (!(a.v == b.v)) return a.v < b.v;
        return a.w < b.w;
    }
};

namespace detail {
inline std::optional<bool> edge_is_knuth(const Switchboard& b, const Word& v, int i)
{
    auto edges = b.incident(v, i);
    if (edges.empty()) return std::nullopt;
    auto& e = edges.front();
    return classify_switch(e.a, e.b, i) == SwitchType::Knuth;
}
} // namespace detail

// Words agreeing in the window (i-1, i, i+1) must carry i-edges of one type.
inline std::vector<LocalityViolation> check_locality(const Switchboard& b)
{
    std::vector<LocalityViolation> out;
    int n = b.word_length();
    std::vector<Word> verts(b.vertices().begin(), b.vertices().end());
    for (int i = 2; i <= n - 1; ++i) {
        for (size_t x = 0; x < verts.size(); ++x)
            for (size_t y = x + 1; y < verts.size(); ++y) {
                if (!(verts[x].subword(i - 2, 3) == verts[y].subword(i - 2, 3))) continue;
                auto tx = detail::edge_is_knuth(b, verts[x], i);
                auto ty = detail::edge_is_knuth(b, verts[y], i);
                if (tx && ty && *tx != *ty) out.push_back({i, verts[x], verts[y]});
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All i-edges of one type, for each i.
inline bool check_strong_locality(const Switchboard& b)
{
    int n = b.word_length();
    for (int i = 2; i <= n - 1; ++i) {
        std::optional<bool> kind;
        for (auto& e : b.edges()) {
            if (e.label != i) continue;
            bool kn = classify_switch(e.a, e.b, i) == SwitchType::Knuth;
            if (!kind) kind = kn;
            else if (*kind != kn) return false;
        }
    }
    return true;
}

} // namespace ncsf
