#include <ncsf/classic.hpp>
#include <ncsf/positivity.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace ncsf;

TEST_CASE("phase-1 simplex basics")
{
    // x1 = 1, x2 = 1 is feasible
    auto r = phase1_simplex({{1, 0}, {0, 1}}, {Rat(1), Rat(1)});
    REQUIRE(r.feasible);
    CHECK(r.primal == std::vector<Rat>({Rat(1), Rat(1)}));

    // x1 + x2 = -1 with x >= 0 is infeasible; dual certifies it
    auto bad = phase1_simplex({{1, 1}}, {Rat(-1)});
    REQUIRE_FALSE(bad.feasible);
    REQUIRE(bad.dual.size() == 1);
    // y^T A <= 0 and y^T b > 0
    CHECK(bad.dual[0] * Rat(1) <= 0);
    CHECK(bad.dual[0] * Rat(-1) > 0);

    // mixing: 2x1 - x2 = 1, x1 + x2 = 2
    auto mix = phase1_simplex({{2, -1}, {1, 1}}, {Rat(1), Rat(2)});
    REQUIRE(mix.feasible);
    CHECK(Rat(2) * mix.primal[0] - mix.primal[1] == Rat(1));
    CHECK(mix.primal[0] + mix.primal[1] == Rat(2));
    CHECK(mix.primal[0] >= 0);
    CHECK(mix.primal[1] >= 0);
}

TEST_CASE("a single word is positive with itself")
{
    IdealSpec ib = IdealSpec::simple(Family::IB, 3);
    NcPolyQ J = NcPolyQ::monomial(Word({2, 1, 3}));
    auto r = q_monomial_positive(J, ib, 3);
    REQUIRE(r.positive);
    CHECK(r.certificate.multiplier == Rat(1));
    Rat total(0);
    for (auto& [w, c] : r.certificate.words) {
        CHECK(c >= 0);
        total += c;
    }
    CHECK(total >= Rat(1));
}

TEST_CASE("J_(2,1) is positive mod IB and the colword expansion verifies")
{
    IdealSpec ib = IdealSpec::simple(Family::IB, 3);
    Partition lam({2, 1});
    NcPolyQ J = nc_schur_e(lam, 3);
    auto r = q_monomial_positive(J, ib, 3);
    CHECK(r.positive);

    std::vector<std::pair<int, Word>> colwords;
    for (auto& t : enumerate_ssyt(lam, 3)) colwords.emplace_back(1, colword(t));
    CHECK(verify_expansion(J, colwords, {ib}));
    // and the same modulo IFG = IB + IS
    CHECK(verify_expansion(J, colwords, {parse_ideal_spec("IFG", 3)}));
}

TEST_CASE("an impossible target yields a verified witness")
{
    IdealSpec ist = IdealSpec::simple(Family::Ist, 2);
    NcPolyQ J;
    J.add_term(Word({1, 2}), Rat(-1));
    auto r = q_monomial_positive(J, ist, 2);
    REQUIRE_FALSE(r.positive);
    std::string why;
    bool ok = verify_witness(J, r.witness.gamma, {ist}, &why);
    INFO(why);
    CHECK(ok);
}

TEST_CASE("witness verifier rejects junk")
{
    IdealSpec is3 = IdealSpec::simple(Family::IS, 3);
    NcPolyQ J = nc_schur_e(Partition({2, 1}), 3);
    std::string why;
    // a positive pairing cannot separate
    NcPolyQ gamma = NcPolyQ::monomial(Word({3, 2, 1}));
    CHECK_FALSE(verify_witness(J, gamma, {is3}, &why));
    // negative word coefficients are not allowed
    NcPolyQ neg;
    neg.add_term(Word({3, 2, 1}), Rat(-1));
    CHECK_FALSE(verify_witness(J, neg, {is3}, &why));
}

TEST_CASE("determinism of repeated runs")
{
    IdealSpec ib = IdealSpec::simple(Family::IB, 3);
    NcPolyQ J = nc_schur_e(Partition({2, 1}), 3);
    auto r1 = q_monomial_positive(J, ib, 3);
    auto r2 = q_monomial_positive(J, ib, 3);
    REQUIRE(r1.positive);
    REQUIRE(r2.positive);
    CHECK(r1.certificate.multiplier == r2.certificate.multiplier);
    CHECK(r1.certificate.words == r2.certificate.words);
}

TEST_CASE("search for lambda = (1,1)")
{
    IdealSpec ic = IdealSpec::simple(Family::IC, 2);
    auto found = search_expansions(Partition({1, 1}), {ic});
    REQUIRE(found.size() == 1);
    REQUIRE(found[0].size() == 1);
    CHECK(found[0][0] == Word({2, 1}));
}

TEST_CASE("search respects the ideal")
{
    // lambda = (2,1) over N=3 mod Iplac+Ist: J matches sums of one word per
    // Knuth class of the two standard tableaux
    IdealSpec spec = parse_ideal_spec("Iplac+Ist", 3);
    long candidates = 0;
    auto found = search_expansions(Partition({2, 1}), {spec}, &candidates);
    CHECK(candidates == 2 * 2); // two classes of size two (content 1,2,3)
    REQUIRE_FALSE(found.empty());
    NcPolyQ J = nc_schur_e(Partition({2, 1}), 3);
    for (auto& expansion : found) {
        std::vector<std::pair<int, Word>> words;
        for (auto& w : expansion) words.emplace_back(1, w);
        CHECK(verify_expansion(J, words, {spec}));
    }
}
