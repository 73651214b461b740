#include <ncsf/tableau.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace ncsf;

TEST_CASE("tableau text form round trip")
{
    Tableau t = Tableau::parse("1,1,2,2/2,2,3/5,6,7");
    CHECK(t.at(1, 1) == 1);
    CHECK(t.at(3, 3) == 7);
    CHECK(t.str() == "1,1,2,2/2,2,3/5,6,7");
    Tableau gap = Tableau::parse("1,1,2,2/2,2,3/.,.,7");
    CHECK_FALSE(gap.has_cell(3, 1));
    CHECK(gap.at(3, 3) == 7);
    CHECK(gap.str() == "1,1,2,2/2,2,3/.,.,7");
}

TEST_CASE("colword of the displayed tableau")
{
    Tableau t = Tableau::parse("1,1,2,2/2,2,3/5,6,7");
    CHECK(colword(t).str() == "5216217322");
    CHECK(colword(Tableau::parse("7")).str() == "7");
    CHECK(colword(Tableau::parse("1/3/5")).str() == "531");
}

TEST_CASE("diagread of the displayed filling")
{
    Tableau t = Tableau::parse("1,1,2,2/2,2,3/.,.,7");
    CHECK(diagread(t).str() == "21271322");
    CHECK(diagread(Tableau::parse("1,2,2,3")).str() == "1223");
    CHECK(diagread_with(Word(), t) == diagread(t));
    // single-row: w lands after the first (one-cell) diagonal
    CHECK(diagread_with(Word({9}), Tableau::parse("1,2")).str() == "192");
}

TEST_CASE("sqread of the displayed RSST")
{
    Tableau t = Tableau::parse("1,2,4,6/3,4,5,7/5,6,8,9");
    CHECK(sqread(t).str() == "563418952476");
    CHECK(sqread(Tableau::parse("4")).str() == "4");
    CHECK(sqread(Tableau::parse("2/5/8")).str() == "852");
}

TEST_CASE("SYT counts")
{
    CHECK(enumerate_syt(Partition({2, 2, 2})).size() == 5);
    CHECK(enumerate_syt(Partition({2, 1})).size() == 2);
    CHECK(enumerate_syt(Partition({3})).size() == 1);
}

TEST_CASE("SSYT enumeration")
{
    CHECK(enumerate_ssyt(Partition({4}), 1).size() == 1);
    // SSYT((2,1); 3) is the Kostka-weighted count 8
    CHECK(enumerate_ssyt(Partition({2, 1}), 3).size() == 8);
    for (auto& t : enumerate_ssyt(Partition({2, 2}), 3)) {
        CHECK(t.at(1, 1) <= t.at(1, 2));
        CHECK(t.at(1, 1) < t.at(2, 1));
    }
}

TEST_CASE("RSST enumeration matches a brute-force filter")
{
    // oracle: filter all strict fillings for diagonal gaps >= 3
    auto brute = [](const Partition& shape, int N) {
        auto all = enumerate_ssyt(shape, N);
        std::vector<Tableau> keep;
        for (auto& t : all) {
            bool ok = true;
            for (size_t r = 1; r <= t.row_count() && ok; ++r)
                for (size_t c = 1; c <= t.col_count() && ok; ++c) {
                    if (!t.has_cell(r, c)) continue;
                    if (c > 1 && t.has_cell(r, c - 1) && t.at(r, c - 1) >= t.at(r, c)) ok = false;
                    if (r > 1 && c > 1 && t.has_cell(r - 1, c - 1) &&
                        t.at(r, c) - t.at(r - 1, c - 1) < 3)
                        ok = false;
                }
            if (ok) keep.push_back(t);
        }
        return keep;
    };
    for (int N = 1; N <= 5; ++N) {
        auto got = enumerate_rsst(Partition({2, 2}), N);
        auto expect = brute(Partition({2, 2}), N);
        CHECK(got.size() == expect.size());
    }
    auto got = enumerate_rsst(Partition({3, 1}), 6);
    auto expect = brute(Partition({3, 1}), 6);
    CHECK(got.size() == expect.size());
}

TEST_CASE("flagged fillings")
{
    // single column: strictly increasing sequences in [n_1]
    auto one = enumerate_flagged({2}, {3});
    CHECK(one.size() == 3); // 12, 13, 23
    // taller second column forces its bottom entry above the first flag
    auto two = enumerate_flagged({1, 2}, {2, 3});
    for (auto& t : two) {
        CHECK(t.at(2, 2) > 2);
        CHECK(t.at(1, 2) >= t.at(1, 1)); // weak row increase
    }
    // an empty leading column leaves the flag condition vacuous
    CHECK(enumerate_flagged({0, 1}, {0, 2}).size() == 2);
    CHECK_THROWS(enumerate_flagged({0, 2}, {2, 2})); // alpha_{j+1} > alpha_j + 1
}

TEST_CASE("knuth insertion")
{
    CHECK(knuth_insert(Word({1, 2, 3, 4})) == Tableau::parse("1,2,3,4"));
    CHECK(knuth_insert(Word({4, 3, 2, 1})) == Tableau::parse("1/2/3/4"));
    // colword(T) inserts back to T for all SSYT with <= 6 cells
    for (auto& shape :
         {Partition({2, 1}), Partition({2, 2}), Partition({3, 2}), Partition({2, 2, 1}),
          Partition({3, 2, 1}), Partition({2, 2, 2})})
        for (auto& t : enumerate_ssyt(shape, 3)) CHECK(knuth_insert(colword(t)) == t);
}

TEST_CASE("plactic classes")
{
    // standard tableaux of shape (2,2,2) have classes of size 5
    for (auto& t : enumerate_syt(Partition({2, 2, 2}))) {
        auto cls = plactic_class(t);
        CHECK(cls.size() == 5);
        for (auto& w : cls) CHECK(knuth_insert(w) == t);
    }
    // single-row standard tableau: only the increasing word
    auto cls = plactic_class(Tableau::parse("1,2,3"));
    REQUIRE(cls.size() == 1);
    CHECK(cls[0] == Word({1, 2, 3}));
}
