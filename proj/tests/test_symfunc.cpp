#include <ncsf/qsym.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ncsf;

namespace {
std::mt19937 rng(777);
}

TEST_CASE("composition <-> descent set bijection")
{
    Composition c({2, 2, 1});
    std::set<int> expect{2, 4};
    CHECK(c.descents() == expect);
    CHECK(Composition::from_descents(expect, 5) == c);
    CHECK(Composition::parse("1|3|2").parts() == std::vector<int>({1, 3, 2}));
    CHECK(Composition({1, 3, 2}).str() == "1|3|2");
    CHECK(Partition::parse("3,2,1").parts() == std::vector<int>({3, 2, 1}));
}

TEST_CASE("conjugate partition")
{
    CHECK(Partition({4, 3, 3}).conjugate() == Partition({3, 3, 3, 1}));
    CHECK(Partition({2, 2, 2}).conjugate() == Partition({3, 3}));
    CHECK(Partition().conjugate() == Partition());
}

TEST_CASE("fund_from_dual basics")
{
    NcPolyQ inc = NcPolyQ::monomial(Word({1, 2, 3, 4}));
    auto f = fund_from_dual(inc);
    CHECK(f.terms().size() == 1);
    CHECK(f.coeff(Composition({4})) == Rat(1));

    NcPolyQ g;
    g.add_term(Word({1, 2}), 1);
    g.add_term(Word({2, 1}), -1);
    auto fg = fund_from_dual(g);
    CHECK(fg.coeff(Composition({2})) == Rat(1));
    CHECK(fg.coeff(Composition({1, 1})) == Rat(-1));

    NcPolyQ mixed;
    mixed.add_term(Word({1}), 1);
    mixed.add_term(Word({1, 2}), 1);
    CHECK_THROWS(fund_from_dual(mixed));
}

TEST_CASE("schur_to_fund small shapes")
{
    auto row = schur_to_fund<Rat>(Partition({4}));
    CHECK(row.terms().size() == 1);
    CHECK(row.coeff(Composition({4})) == Rat(1));

    auto col = schur_to_fund<Rat>(Partition({1, 1, 1}));
    CHECK(col.terms().size() == 1);
    CHECK(col.coeff(Composition({1, 1, 1})) == Rat(1));

    // the two standard tableaux of shape (2,1)
    auto s21 = schur_to_fund<Rat>(Partition({2, 1}));
    CHECK(s21.terms().size() == 2);
    CHECK(s21.coeff(Composition({2, 1})) == Rat(1));
    CHECK(s21.coeff(Composition({1, 2})) == Rat(1));
}

TEST_CASE("schur_expand round trip on |lambda| <= 6")
{
    for (int n = 1; n <= 6; ++n) {
        for (auto& lam : partitions_of(n)) {
            auto e = schur_expand(schur_to_fund<Rat>(lam));
            REQUIRE(e.terms().size() == 1);
            CHECK(e.coeff(lam) == Rat(1));
        }
    }
}

TEST_CASE("schur_expand rejects a bare Q_{1|2}")
{
    FundExpansion<Rat> f(3);
    f.add(Composition({1, 2}), Rat(1));
    CHECK_THROWS_AS(schur_expand(f), NotSymmetricError);
    CHECK_FALSE(is_symmetric(f));
}

TEST_CASE("is_symmetric agrees with schur span membership")
{
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4); // degrees 3..6
        auto lams = partitions_of(n);
        FundExpansion<Rat> f(n);
        bool nonzero = false;
        for (auto& lam : lams) {
            long c = static_cast<long>(rng() % 5) - 2;
            if (c == 0) continue;
            nonzero = true;
            FundExpansion<Rat> part = schur_to_fund<Rat>(lam);
            for (auto& [a, v] : part.terms()) f.add(a, Rat(c) * v);
        }
        CHECK(is_symmetric(f));
        if (nonzero) CHECK_NOTHROW(schur_expand(f));
    }
}

TEST_CASE("schur functions of degree <= 5 are symmetric")
{
    for (int n = 1; n <= 5; ++n)
        for (auto& lam : partitions_of(n)) CHECK(is_symmetric(schur_to_fund<Rat>(lam)));
}

TEST_CASE("schur expansion line format")
{
    SchurExpansion<Rat> s(5);
    s.add(Partition({3, 2}), Rat(1));
    s.add(Partition({2, 2, 1}), Rat(-1));
    CHECK(s.str() == "2,2,1 : -1\n3,2 : 1\n");
}
