#include <ncsf/llt.hpp>

#include <ncsf/fixtures.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace ncsf;

namespace {

SchurExpansion<QFrac> qs(int n,
                         std::initializer_list<std::pair<Partition, std::pair<long, int>>> items)
{
    SchurExpansion<QFrac> out(n);
    for (auto& [p, ce] : items) out.add(p, QFrac(Rat(ce.first)) * QFrac::q_power(ce.second));
    return out;
}

} // namespace

TEST_CASE("shape tuple grammar")
{
    SkewTuple b = SkewTuple::parse("2/1;1;2");
    CHECK(b.level() == 3);
    CHECK(b.cell_count() == 4);
    CHECK(b.str() == "2/1;1;2");
    CHECK(SkewTuple::parse("3,3/1,1").shapes[0].outer == Partition({3, 3}));
    CHECK(SkewTuple::parse("2/1@2").shapes[0].offset == 2);
    CHECK_THROWS(SkewTuple::parse("1/2"));
}

TEST_CASE("shifted contents of the example tuple")
{
    SkewTuple b = SkewTuple::parse("2/1;33/11;33/21");
    auto tables = b.shifted_content_tables();
    REQUIRE(tables.size() == 3);
    CHECK(tables[0].str() == ".,3");
    CHECK(tables[1].str() == ".,4,7/.,1,4");
    CHECK(tables[2].str() == ".,.,8/.,2,5");
    std::vector<int> ms{1, 2, 3, 4, 4, 5, 7, 8};
    CHECK(b.shifted_contents() == ms);
    // the lone cell of the first component: c = 1, shifted 3
    CHECK(b.shapes[0].cells() == std::vector<std::array<int, 3>>{{1, 2, 1}});
}

TEST_CASE("ordinary contents at k = 1")
{
    SkewTuple b = SkewTuple::parse("3,2");
    auto sc = b.shifted_contents();
    CHECK(sc == std::vector<int>({-1, 0, 0, 1, 2}));
}

TEST_CASE("word membership and rearrangement property")
{
    SkewTuple b = SkewTuple::parse("2/1;33/11;33/21");
    auto words = words_of(b);
    std::set<Word> ws(words.begin(), words.end());
    CHECK(ws.count(Word({4, 2, 1, 7, 3, 8, 4, 5})));
    CHECK(ws.count(Word({3, 4, 1, 7, 4, 2, 8, 5})));
    CHECK(ws.count(Word({8, 3, 4, 1, 2, 7, 4, 5})));
    CHECK(ws.count(Word({4, 8, 7, 1, 4, 2, 3, 5})));
    CHECK(ws.count(Word({2, 8, 5, 3, 4, 1, 7, 4})));

    auto contents = b.shifted_contents();
    for (auto& v : words) {
        std::vector<int> sorted;
        for (auto x : v.letters()) sorted.push_back(x);
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == contents);
    }

    // the example's inversion table
    CHECK(inv_k(Word({4, 2, 1, 7, 3, 8, 4, 5}), 3) == 4);
    CHECK(inv_k(Word({3, 4, 1, 7, 4, 2, 8, 5}), 3) == 5);
    CHECK(inv_k(Word({8, 3, 4, 1, 2, 7, 4, 5}), 3) == 5);
    CHECK(inv_k(Word({4, 8, 7, 1, 4, 2, 3, 5}), 3) == 6);
    CHECK(inv_k(Word({2, 8, 5, 3, 4, 1, 7, 4}), 3) == 6);
}

TEST_CASE("single column at k = 1 forces the order")
{
    SkewTuple b = SkewTuple::parse("1,1,1@5");
    auto words = words_of(b);
    REQUIRE(words.size() == 1);
    CHECK(words[0] == Word({5, 4, 3}));
}

TEST_CASE("LLT polynomial of (2/1;1;2)")
{
    SkewTuple b = SkewTuple::parse("2/1;1;2");
    auto got = llt_polynomial(b);
    auto expect = qs(4, {{Partition({4}), {1, 0}},
                         {Partition({3, 1}), {1, 1}},
                         {Partition({2, 2}), {1, 2}},
                         {Partition({2, 1, 1}), {1, 3}}});
    // s31 appears at q and q^2
    expect.add(Partition({3, 1}), QFrac::q_power(2));
    CHECK(got == expect);
}

TEST_CASE("LLT polynomial of (3/2;33/11;2/1)")
{
    SkewTuple b = SkewTuple::parse("3/2;33/11;2/1");
    auto got = llt_polynomial(b);
    SchurExpansion<QFrac> expect(6);
    expect.add(Partition({4, 2}), QFrac::q_power(2));
    expect.add(Partition({3, 3}), QFrac::q_power(3));
    expect.add(Partition({3, 2, 1}), QFrac::q_power(3) + QFrac::q_power(4));
    expect.add(Partition({2, 2, 2}), QFrac::q_power(4));
    expect.add(Partition({2, 2, 1, 1}), QFrac::q_power(5));
    CHECK(got == expect);
}

TEST_CASE("k = 1 gives the skew Schur function, q-free")
{
    SkewTuple b = SkewTuple::parse("2,2/1@3");
    auto got = llt_polynomial(b);
    SchurExpansion<QFrac> expect(3);
    expect.add(Partition({2, 1}), QFrac(1));
    CHECK(got == expect);
}

TEST_CASE("LLT switchboards match the displayed boards")
{
    SkewTuple b = SkewTuple::parse("2/1;1;2");
    const char* fixtures_by_t[4] = {fixtures::fig5_t0, fixtures::fig5_t1, fixtures::fig5_t2,
                                    fixtures::fig5_t3};
    for (int t = 0; t <= 3; ++t) {
        Switchboard got = llt_switchboard(b, t);
        Switchboard expect = Switchboard::parse(fixtures_by_t[t]);
        CHECK(got.vertices() == expect.vertices());
        CHECK(got.edges() == expect.edges());
    }
    CHECK(llt_switchboard(b, 99).vertices().empty());

    // the two components of the t=2 board
    auto comps = components(llt_switchboard(b, 2));
    REQUIRE(comps.size() == 2);
    std::set<std::string> fs;
    for (auto& c : comps) fs.insert(schur_expand(c.symfunc()).str());
    SchurExpansion<Rat> s31(4), s22(4);
    s31.add(Partition({3, 1}), 1);
    s22.add(Partition({2, 2}), 1);
    CHECK(fs.count(s31.str()));
    CHECK(fs.count(s22.str()));
}

TEST_CASE("the 21-vertex board")
{
    SkewTuple b = SkewTuple::parse("3/2;33/11;2/1");
    Switchboard got = llt_switchboard(b, 3);
    Switchboard expect = Switchboard::parse(fixtures::fig7);
    CHECK(got.vertices().size() == 21);
    CHECK(got.vertices() == expect.vertices());
    CHECK(got.edges() == expect.edges());
    auto f = schur_expand(got.symfunc());
    SchurExpansion<Rat> want(6);
    want.add(Partition({3, 3}), 1);
    want.add(Partition({3, 2, 1}), 1);
    CHECK(f == want);
}

TEST_CASE("both LLT routes agree")
{
    for (const char* shapes : {"2/1;1;2", "3/2;33/11;2/1", "2@1;1,1@2", "2,1/1@2;2/1@1"}) {
        SkewTuple b = SkewTuple::parse(shapes);
        CHECK(llt_polynomial(b) == llt_via_boards(b));
    }
}

TEST_CASE("assaf switches preserve membership and inv")
{
    SkewTuple b = SkewTuple::parse("3/2;33/11;2/1");
    auto words = words_of(b);
    std::set<Word> in_w(words.begin(), words.end());
    for (int t = 2; t <= 5; ++t) {
        Switchboard board = llt_switchboard(b, t);
        for (auto& e : board.edges()) {
            CHECK(in_w.count(e.a));
            CHECK(in_w.count(e.b));
            CHECK(inv_k(e.a, 3) == t);
            CHECK(inv_k(e.b, 3) == t);
        }
    }
}

TEST_CASE("sqread coefficients match the polynomial route")
{
    for (const char* shapes : {"2/1;1;2", "3/2;33/11;2/1"}) {
        SkewTuple b = SkewTuple::parse(shapes);
        CHECK(schur_coeffs_sqread(b) == llt_polynomial(b));
    }
    CHECK_THROWS(schur_coeffs_sqread(SkewTuple::parse("2;2")));
}

TEST_CASE("q-weighted vector lies in the Lam perp and pairs to the coefficients")
{
    for (const char* shapes : {"2/1;1;2", "3/2;33/11;2/1"}) {
        SkewTuple b = SkewTuple::parse(shapes);
        int N = llt_alphabet(b);
        NcPolyF gamma;
        for (auto& v : words_of(b)) gamma.add_term(v, QFrac::q_power(inv_k(v, 3)));
        IdealSpec lam = IdealSpec::simple(Family::JlamQ, N, 3);
        CHECK(in_perp<QFrac>(gamma, lam));
        auto poly = llt_polynomial(b);
        for (auto& lamb : partitions_of(b.cell_count())) {
            QFrac lhs = schur_coeff_via_pairing(lamb, gamma, N);
            CHECK(lhs == poly.coeff(lamb));
        }
    }
}

TEST_CASE("horizontal translation invariance")
{
    SkewTuple a = SkewTuple::parse("2/1;1;2");
    SkewTuple b = SkewTuple::parse("2/1@1;1@1;2@1");
    CHECK(llt_polynomial(a) == llt_polynomial(b));
}
