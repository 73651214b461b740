#include <ncsf/ncsym.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace ncsf;

TEST_CASE("elementary symmetric functions")
{
    CHECK(elementary(0, std::vector<int>{2, 5}) == NcPolyQ::unit());
    CHECK(elementary(4, std::vector<int>{1, 2, 3}).is_zero());
    CHECK(elementary(-1, 3).is_zero());

    NcPolyQ e2;
    e2.add_term(Word({2, 1}), 1);
    e2.add_term(Word({3, 1}), 1);
    e2.add_term(Word({3, 2}), 1);
    CHECK(elementary(2, 3) == e2);
}

TEST_CASE("complete homogeneous symmetric functions")
{
    CHECK(complete(0, 4) == NcPolyQ::unit());
    CHECK(complete(-2, 4).is_zero());
    CHECK(complete(1, 5) == elementary(1, 5));

    NcPolyQ h2;
    h2.add_term(Word({1, 1}), 1);
    h2.add_term(Word({1, 2}), 1);
    h2.add_term(Word({2, 2}), 1);
    CHECK(complete(2, 2) == h2);
}

TEST_CASE("alternating h/e identity, exact in the free algebra")
{
    for (int N = 1; N <= 4; ++N)
        for (int m = 1; m <= 6; ++m) {
            NcPolyQ acc;
            for (int k = 0; k <= m; ++k) {
                NcPolyQ term = complete(m - k, N) * elementary(k, N);
                if (k % 2) acc -= term;
                else acc += term;
            }
            INFO("N=" << N << " m=" << m);
            CHECK(acc.is_zero());
        }
}

TEST_CASE("e recurrence over an initial segment")
{
    for (int N = 1; N <= 5; ++N)
        for (int m = 1; m <= N; ++m)
            for (int k = 1; k <= m; ++k) {
                NcPolyQ lhs = elementary(k, m);
                NcPolyQ rhs = NcPolyQ::monomial(Word({m})) * elementary(k - 1, m - 1) +
                              elementary(k, m - 1);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("nc schur via e")
{
    CHECK(nc_schur_e(Partition({1}), 3) == elementary(1, 3));
    CHECK(nc_schur_e(Partition({1, 1, 1}), 4) == elementary(3, 4));
    // lambda = (2,2,2): e_3^2 - e_4 e_2
    NcPolyQ expect =
        elementary(3, 6) * elementary(3, 6) - elementary(4, 6) * elementary(2, 6);
    CHECK(nc_schur_e(Partition({2, 2, 2}), 6) == expect);
}

TEST_CASE("nc schur via h")
{
    CHECK(nc_schur_h(Partition({3}), 4) == complete(3, 4));
    CHECK(nc_schur_h(Partition({1, 1}), 3) ==
          complete(1, 3) * complete(1, 3) - complete(2, 3));
    CHECK(nc_schur_h(Partition({2, 1}), 3) ==
          complete(2, 3) * complete(1, 3) - complete(3, 3));
}

TEST_CASE("flagged schur specializations")
{
    // alpha = lambda', all flags N: the plain noncommutative Schur function
    Partition lam({2, 2, 2});
    Partition lc = lam.conjugate();
    std::vector<int> alpha(lc.parts());
    std::vector<int> flags(alpha.size(), 6);
    CHECK(flagged_schur(alpha, flags) == nc_schur_e(lam, 6));

    // leading zero flag with a nonempty first column kills everything
    CHECK(flagged_schur({2, 1}, {0, 3}).is_zero());

    // single column
    CHECK(flagged_schur({2}, {4}) == elementary(2, 4));
}

TEST_CASE("augmented flagged schur")
{
    // empty interleaved words give back the plain flagged function
    CHECK(augmented_flagged_schur({1, 1}, {2, 2}, {Word()}) == flagged_schur({1, 1}, {2, 2}));

    // brute-force signed sum over S_2 for alpha=(1,1), n=(1,1), w = "2"
    NcPolyQ direct;
    // pi = id: e_1(u_[1]) u_2 e_1(u_[1]); pi = (12): -e_2(u_[1]) u_2 e_0(u_[1]) = 0
    direct += NcPolyQ::monomial(Word({1})) * NcPolyQ::monomial(Word({2})) *
              NcPolyQ::monomial(Word({1}));
    CHECK(augmented_flagged_schur({1, 1}, {1, 1}, {Word({2})}) == direct);

    CHECK_THROWS(augmented_flagged_schur({1, 1}, {1, 1}, {}));
}

TEST_CASE("peeling index")
{
    CHECK(peeling_index({3, 2, 2}) == 1);
    CHECK(peeling_index({1, 2, 3}) == 3);
    CHECK(peeling_index({0, 1}) == 2);
    CHECK(peeling_index({1, 2, 2, 3}) == 2);
}
