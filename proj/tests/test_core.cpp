#include <ncsf/ncpoly.hpp>
#include <ncsf/qpoly.hpp>
#include <ncsf/rational.hpp>
#include <ncsf/word.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ncsf;

namespace {

std::mt19937 rng(20231007);

Word random_word(int N, int len)
{
    std::vector<uint8_t> v(len);
    for (auto& x : v) x = static_cast<uint8_t>(1 + rng() % N);
    return Word(std::move(v));
}

NcPolyQ random_poly(int N, int maxlen, int terms)
{
    NcPolyQ f;
    for (int i = 0; i < terms; ++i) {
        int len = rng() % (maxlen + 1);
        long num = static_cast<long>(rng() % 9) - 4;
        f.add_term(random_word(N, len), Rat(num));
    }
    return f;
}

NcPolyQ random_homogeneous(int N, int len, int terms)
{
    NcPolyQ f;
    for (int i = 0; i < terms; ++i)
        f.add_term(random_word(N, len), Rat(static_cast<long>(rng() % 7) - 3));
    return f;
}

} // namespace

TEST_CASE("word text forms")
{
    CHECK(Word({4, 2, 1, 7, 3, 8, 4, 5}).str() == "42173845");
    CHECK(Word::parse("42173845") == Word({4, 2, 1, 7, 3, 8, 4, 5}));
    CHECK(Word({4, 2, 17}).str() == "4,2,17");
    CHECK(Word::parse("4,2,17") == Word({4, 2, 17}));
    CHECK(Word().str() == "-");
    CHECK_THROWS(Word({0}));
    CHECK_THROWS(Word({64}));
}

TEST_CASE("descent sets")
{
    CHECK(Word({1, 2, 3, 4}).descent_set().empty());
    std::set<int> all{1, 2, 3};
    CHECK(Word({4, 3, 2, 1}).descent_set() == all);
    std::set<int> expected{1, 2, 4, 6};
    CHECK(Word({4, 2, 1, 7, 3, 8, 4, 5}).descent_set() == expected);
}

TEST_CASE("multiplication is concatenation")
{
    auto u1 = NcPolyQ::monomial(Word({1}));
    auto u2 = NcPolyQ::monomial(Word({2}));
    CHECK(u1 * u2 == NcPolyQ::monomial(Word({1, 2})));

    auto f = random_poly(3, 4, 6);
    CHECK(f * NcPolyQ::unit() == f);
    CHECK(NcPolyQ::unit() * f == f);

    auto lhs = (u1 + u2) * (u1 - u2);
    NcPolyQ expect;
    expect.add_term(Word({1, 1}), 1);
    expect.add_term(Word({1, 2}), -1);
    expect.add_term(Word({2, 1}), 1);
    expect.add_term(Word({2, 2}), -1);
    CHECK(lhs == expect);
}

TEST_CASE("product associativity on random triples")
{
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_poly(3, 3, 4);
        auto g = random_poly(3, 3, 4);
        auto h = random_poly(3, 3, 4);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("pairing is basis-diagonal")
{
    auto u21 = NcPolyQ::monomial(Word({2, 1}));
    CHECK(pair(u21, NcPolyQ::monomial(Word({2, 1}))) == Rat(1));
    CHECK(pair(u21, NcPolyQ::monomial(Word({1, 2}))) == Rat(0));

    NcPolyQ f;
    f.add_term(Word({1, 2}), 2);
    f.add_term(Word({2, 1}), 1);
    NcPolyQ gamma;
    gamma.add_term(Word({1, 2}), 3);
    gamma.add_term(Word({2, 1}), -1);
    CHECK(pair(f, gamma) == Rat(5));
}

TEST_CASE("pairing of product monomials detects concatenation")
{
    for (int trial = 0; trial < 30; ++trial) {
        Word a = random_word(3, 2), b = random_word(3, 3), v = random_word(3, 5);
        Rat p = pair(NcPolyQ::monomial(a) * NcPolyQ::monomial(b), NcPolyQ::monomial(v));
        CHECK(p == ((a * b) == v ? Rat(1) : Rat(0)));
    }
}

TEST_CASE("degree grading of products")
{
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_homogeneous(3, 2, 4);
        auto g = random_homogeneous(3, 3, 4);
        auto h = f * g;
        for (auto& [w, c] : h.terms()) CHECK(w.size() == 5);
    }
}

TEST_CASE("rational arithmetic is exact")
{
    for (int trial = 0; trial < 50; ++trial) {
        long a = static_cast<long>(rng() % 2001) - 1000;
        long b = static_cast<long>(rng() % 999) + 1;
        Rat r = Rat(a) / Rat(b);
        CHECK(r * Rat(b) == Rat(a));
    }
}

TEST_CASE("laurent multiplication agrees with coefficient convolution")
{
    // (1 + 2q)(3 - q + q^2) expanded by hand
    QPoly a = QPoly(1) + QPoly::monomial(2, 1);
    QPoly b = QPoly(3) - QPoly::monomial(1, 1) + QPoly::monomial(1, 2);
    QPoly ab = a * b;
    CHECK(ab.coeff(0) == 3);
    CHECK(ab.coeff(1) == 5);
    CHECK(ab.coeff(2) == -1);
    CHECK(ab.coeff(3) == 2);

    // random convolution check
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<long> ca(4), cb(4);
        QPoly p, q;
        for (int i = 0; i < 4; ++i) {
            ca[i] = static_cast<long>(rng() % 11) - 5;
            cb[i] = static_cast<long>(rng() % 11) - 5;
            p = p + QPoly::monomial(Rat(ca[i]), i);
            q = q + QPoly::monomial(Rat(cb[i]), i);
        }
        QPoly pq = p * q;
        for (int e = 0; e <= 6; ++e) {
            long conv = 0;
            for (int i = 0; i <= e && i < 4; ++i)
                if (e - i < 4) conv += ca[i] * cb[e - i];
            CHECK(pq.coeff(e) == Rat(conv));
        }
    }
}

TEST_CASE("rational functions normalize to monic denominator")
{
    QFrac q = QFrac::q_power(1);
    QFrac f = (q * q - QFrac(1)) / (q - QFrac(1)); // q + 1
    CHECK(f == q + QFrac(1));
    QFrac g = QFrac(1) / (QFrac(2) * q);
    CHECK(g.den().lead() == Rat(1));
    CHECK(to_string(QFrac::q_power(-1)) == "q^-1");
    CHECK(to_string(q * q + QFrac(2)) == "2 + q^2");
    CHECK(to_string(QFrac(QPoly(1), QPoly(1) + QPoly::monomial(1, 1))) == "(1)/(1 + q)");
}

TEST_CASE("inv_k statistic")
{
    CHECK(inv_k(Word({4, 2, 1, 7, 3, 8, 4, 5}), 3) == 4);
    CHECK(inv_k(Word({2, 8, 5, 3, 4, 1, 7, 4}), 3) == 6);
    CHECK(inv_k(Word({1, 1, 2, 3, 5}), 3) == 0);
}

TEST_CASE("nonzero k-words")
{
    CHECK(nonzero_k_word(Word({3, 1, 4, 2}), 3));
    CHECK_FALSE(nonzero_k_word(Word({2, 2}), 3));
    CHECK(nonzero_k_word(Word({4, 1, 7, 4}), 3));
    CHECK_FALSE(nonzero_k_word(Word({1, 4, 1}), 3));
}
