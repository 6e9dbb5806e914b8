#include <gtest/gtest.h>

#include "polycoord/errors.hpp"
#include "polycoord/game.hpp"
#include "random_instances.hpp"

using namespace polycoord;
using polycoord::testkit::Rng;
namespace tk = polycoord::testkit;

namespace {

const Rational kThreeFifths(3, 5);

PolymatrixGame single_edge(const PayoffBimatrix &payoff) {
    PolymatrixGame g(2);
    g.add_edge(0, 1, payoff);
    return g;
}

PolymatrixGame triangle(const PayoffBimatrix &payoff) {
    PolymatrixGame g(3);
    g.add_edge(0, 1, payoff);
    g.add_edge(1, 2, payoff);
    g.add_edge(0, 2, payoff);
    return g;
}

} // namespace

TEST(Rational, ParsesAndPrintsLowestTerms) {
    EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
    EXPECT_EQ(Rational::parse("-10/-4").str(), "5/2");
    EXPECT_EQ(Rational::parse("3").str(), "3/1");
    EXPECT_EQ(Rational::parse("0/7").str(), "0/1");
    EXPECT_EQ(Rational(4, -6).str(), "-2/3");
}

TEST(Rational, RejectsMalformedText) {
    for (const char *bad : {"", "1/0", "a/2", "1/", "/3", "1.5", "1/2/3", "--1"}) {
        EXPECT_THROW(Rational::parse(bad), InvalidInput) << bad;
    }
    EXPECT_THROW(Rational(1, 0), InvalidInput);
    EXPECT_THROW(Rational(1) / Rational(0), InvalidInput);
}

TEST(Rational, ArithmeticIsExact) {
    const Rational third(1, 3);
    EXPECT_EQ(third + third + third, Rational(1));
    EXPECT_EQ(Rational(7, 2).floor(), Rational(3));
    EXPECT_EQ(Rational(-7, 2).floor(), Rational(-4));
    EXPECT_EQ(Rational(7, 2).ceil(), Rational(4));
    EXPECT_EQ(Rational(-7, 2).ceil(), Rational(-3));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").str(), "41152263004115226300411522630/1");
    EXPECT_THROW(Rational::parse("123456789012345678901234567890").to_int64(), InvalidInput);
    EXPECT_THROW(Rational(1, 2).to_int64(), InvalidInput);
    EXPECT_EQ(Rational(-9).to_int64(), -9);
}

TEST(Profile, ParseAndOrder) {
    const auto p = StrategyProfile::parse("abba");
    EXPECT_EQ(p.str(), "abba");
    EXPECT_EQ(p.count(Action::B), 2U);
    EXPECT_EQ(p.flipped(0).str(), "bbba");
    EXPECT_LT(StrategyProfile::parse("aab"), StrategyProfile::parse("aba"));
    EXPECT_THROW(StrategyProfile::parse("abc"), InvalidInput);
}

TEST(Graph, RejectsBadEdges) {
    Graph g(3);
    g.add_edge(0, 1);
    EXPECT_THROW(g.add_edge(1, 0), InvalidInput);
    EXPECT_THROW(g.add_edge(2, 2), InvalidInput);
    EXPECT_THROW(g.add_edge(0, 3), InvalidInput);
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_EQ(Graph::complete(5).num_edges(), 10U);
}

TEST(Game, RejectsParallelEdgesInEitherOrientation) {
    PolymatrixGame g(3);
    g.add_edge(0, 1, coordination_bimatrix(kThreeFifths, kThreeFifths));
    EXPECT_THROW(g.add_edge(1, 0, coordination_bimatrix(kThreeFifths, kThreeFifths)), InvalidInput);
    EXPECT_THROW(g.add_edge(0, 0, coordination_bimatrix(kThreeFifths, kThreeFifths)), InvalidInput);
}

TEST(Game, UtilityExamples) {
    const auto gc = coordination_bimatrix(kThreeFifths, kThreeFifths);
    EXPECT_EQ(utility(single_edge(gc), StrategyProfile::parse("aa"), 0), kThreeFifths);
    PolymatrixGame isolated(1);
    EXPECT_EQ(utility(isolated, StrategyProfile::parse("b"), 0), Rational(0));
    EXPECT_EQ(utility(triangle(gc), StrategyProfile::parse("aab"), 0), kThreeFifths);
    EXPECT_THROW(utility(isolated, StrategyProfile::parse("a"), 1), InvalidInput);
}

TEST(Game, WelfareExamples) {
    const auto gc = coordination_bimatrix(kThreeFifths, kThreeFifths);
    EXPECT_EQ(welfare(single_edge(gc), StrategyProfile::parse("aa")), Rational(6, 5));
    EXPECT_EQ(welfare(single_edge(gc), StrategyProfile::parse("ab")), Rational(0));
    const auto gs = anti_coordination_bimatrix(Rational(1, 2), Rational(1, 2));
    EXPECT_EQ(welfare(triangle(gs), StrategyProfile::parse("aab")), Rational(2));
}

TEST(Game, NashExamples) {
    const auto edge = single_edge(coordination_bimatrix(kThreeFifths, kThreeFifths));
    const auto aa = is_nash(edge, StrategyProfile::parse("aa"));
    EXPECT_TRUE(aa.equilibrium);
    EXPECT_TRUE(aa.strict);
    const auto ab = is_nash(edge, StrategyProfile::parse("ab"));
    EXPECT_FALSE(ab.equilibrium);
    EXPECT_EQ(ab.deviators, (std::vector<Vertex>{0, 1}));
    EXPECT_TRUE(is_nash(PolymatrixGame(4), StrategyProfile::parse("abab")).equilibrium);
}

TEST(Game, ClassifyEdge) {
    EXPECT_EQ(classify_edge(coordination_bimatrix(Rational(1, 4), Rational(2, 3))), EdgeClass::PureCoordination);
    EXPECT_EQ(classify_edge(anti_coordination_bimatrix(Rational(1, 4), Rational(2, 3))), EdgeClass::AntiCoordination);
    EXPECT_EQ(classify_edge({}), EdgeClass::Other);
    // Boundary thresholds create ties, so the equilibria are no longer strict.
    EXPECT_EQ(classify_edge(coordination_bimatrix(Rational(1), Rational(1, 2))), EdgeClass::Other);

    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const long q = tk::uniform_int(rng, 2, 30);
        const Rational gi(tk::uniform_int(rng, 1, q - 1), q);
        const Rational gj(tk::uniform_int(rng, 1, q - 1), q);
        EXPECT_EQ(classify_edge(coordination_bimatrix(gi, gj)), EdgeClass::PureCoordination);
        EXPECT_EQ(classify_edge(anti_coordination_bimatrix(gi, gj)), EdgeClass::AntiCoordination);
    }
}

TEST(Game, WelfareMatrixShapes) {
    const Rational gi(1, 3);
    const Rational gj(3, 4);
    EXPECT_EQ(welfare_matrix(coordination_bimatrix(gi, gj)), (Matrix2{gi + gj, 0, 0, 2 - gi - gj}));
    EXPECT_EQ(welfare_matrix(anti_coordination_bimatrix(gi, gj)), (Matrix2{0, gi + 1 - gj, 1 - gi + gj, 0}));
    EXPECT_EQ(welfare_matrix(coordination_bimatrix(kThreeFifths, kThreeFifths)),
              (Matrix2{Rational(6, 5), 0, 0, Rational(4, 5)}));
}

TEST(Game, PotentialMatrixExamples) {
    EXPECT_EQ(potential_matrix(coordination_bimatrix(kThreeFifths, kThreeFifths)),
              (Matrix2{Rational(1, 5), Rational(-2, 5), Rational(-2, 5), 0}));
    EXPECT_EQ(potential_matrix({}), Matrix2{});
    EXPECT_THROW(potential_matrix({{1, 0, 0, 1}, {1, 0, 0, 2}}), NotAPotentialGame);
}

TEST(Game, TotalPotentialExamples) {
    const auto gc = coordination_bimatrix(kThreeFifths, kThreeFifths);
    EXPECT_EQ(total_potential(single_edge(gc), StrategyProfile::parse("aa")), Rational(1, 5));
    EXPECT_EQ(total_potential(single_edge(gc), StrategyProfile::parse("bb")), Rational(0));
    PolymatrixGame two(4);
    two.add_edge(0, 1, gc);
    two.add_edge(2, 3, gc);
    EXPECT_EQ(total_potential(two, StrategyProfile::parse("aaaa")), Rational(2, 5));
}

TEST(GameProperties, WelfareAgreesAcrossThreeComputations) {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const auto game = tk::random_game(rng, tk::uniform_int(rng, 1, 9), 0.5);
        for (int k = 0; k < 8; ++k) {
            const auto s = tk::random_profile(rng, game.num_vertices());
            Rational by_matrix;
            for (const auto &e : game.edges()) {
                by_matrix += welfare_matrix(e.payoff).at(s[e.row], s[e.col]);
            }
            const Rational w = welfare(game, s);
            EXPECT_EQ(w, tk::naive_welfare(game, s));
            EXPECT_EQ(w, by_matrix);
        }
    }
}

TEST(GameProperties, NashMatchesExhaustiveFlips) {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto game = tk::random_game(rng, tk::uniform_int(rng, 1, 8), 0.4);
        const std::size_t n = game.num_vertices();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const auto s = tk::profile_from_bits(bits, n);
            const auto report = is_nash(game, s);
            ASSERT_EQ(report.equilibrium, tk::naive_is_nash(game, s));
            std::vector<Vertex> deviators;
            bool strict = true;
            for (Vertex i = 0; i < n; ++i) {
                const Rational gain = tk::naive_utility(game, s.flipped(i), i) - tk::naive_utility(game, s, i);
                if (gain > 0) {
                    deviators.push_back(i);
                }
                strict = strict && gain < 0;
            }
            ASSERT_EQ(report.deviators, deviators);
            ASSERT_EQ(report.strict, strict);
        }
    }
}

TEST(GameProperties, PotentialDifferenceLaw) {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = tk::uniform_int(rng, 2, 8);
        PolymatrixGame game(n);
        for (const auto &[i, j] : tk::random_pairs(rng, n, 0.5)) {
            // Coordination games with arbitrary thresholds plus an exact
            // potential game built from a potential and dummy terms.
            if (tk::coin(rng, 0.5)) {
                game.add_edge(i, j, coordination_bimatrix(tk::random_unit(rng), tk::random_unit(rng)));
            } else {
                const Matrix2 phi = tk::random_matrix(rng);
                const Rational d0 = tk::random_rational(rng);
                const Rational d1 = tk::random_rational(rng);
                const Rational e0 = tk::random_rational(rng);
                const Rational e1 = tk::random_rational(rng);
                // u_row(si, sj) = phi(si, sj) + d(sj); u_col(sj, si) = phi(si, sj) + e(si).
                game.add_edge(i, j,
                              {{phi.aa + d0, phi.ab + d1, phi.ba + d0, phi.bb + d1},
                               {phi.aa + e0, phi.ba + e1, phi.ab + e0, phi.bb + e1}});
            }
        }
        for (int k = 0; k < 10; ++k) {
            const auto s = tk::random_profile(rng, n);
            for (Vertex i = 0; i < n; ++i) {
                const auto t = s.flipped(i);
                ASSERT_EQ(total_potential(game, t) - total_potential(game, s), utility(game, t, i) - utility(game, s, i));
            }
        }
    }
}
