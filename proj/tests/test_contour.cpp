#include "logmax/contour.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace logmax;

namespace {

Rational rnd(std::mt19937_64& g, long lo, long hi, long den) {
    return Rational(lo * den + static_cast<long>(g() % static_cast<unsigned long>((hi - lo) * den + 1)), den);
}

}  // namespace

TEST(Contour, EnginesAgreeFiniteN) {
    std::mt19937_64 g(2024);
    int checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        MomentQuery q{-rnd(g, 0, 1, 13), rnd(g, 1, 3, 7), rnd(g, 1, 3, 5), rnd(g, 1, 4, 3), 1};
        if (q.kappa.is_zero()) continue;
        for (int k : {1, 2, 3, 4, -1, -2}) {
            q.k = k;
            try {
                auto r = crosscheck(q);
                EXPECT_TRUE(r.equal) << "k=" << k << " contour=" << r.contour_value << " partition=" << r.partition_value;
                ++checked;
            } catch (const Divergence&) {
            }
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(Contour, EnginesAgreeAtZeroN) {
    std::mt19937_64 g(99);
    for (int trial = 0; trial < 8; ++trial) {
        MomentQuery q{-rnd(g, 1, 9, 11) / Rational(9), rnd(g, 2, 4, 7), rnd(g, 1, 3, 5), 0, 1};
        for (int k : {1, 2, 3, -1, -2}) {
            q.k = k;
            auto r = crosscheck(q);
            EXPECT_TRUE(r.equal) << "k=" << k << " contour=" << r.contour_value << " partition=" << r.partition_value;
        }
    }
}

TEST(Contour, FrozenKindsMatchFrozenMoments) {
    MomentQuery q{-1, Rational(3, 2), Rational(5, 4), 0, 1};
    for (int k : {1, 2, 3, -1}) {
        q.k = k;
        auto r = crosscheck(q, true);
        EXPECT_TRUE(r.equal) << k;
    }
}

TEST(Contour, SpecialBetaStrictAndConfluentAgree) {
    // at beta^2 = 1/3 the shifted pole families overlap but the integrand stays simple
    ContourSpec s;
    s.beta2 = Rational(1, 3);
    s.a = 1;
    s.b = 1;
    s.n = 2;
    s.k = 4;
    for (int k : {4, 5, 6}) {
        s.k = k;
        Rational v = evaluate_nested(s).value;
        EXPECT_EQ(evaluate_nested(s, 1000000, false, true).value, v) << k;
        EXPECT_EQ(v, moment_partition_sum({-s.beta2, s.a, s.b, s.n, k})) << k;
    }
}

TEST(Contour, SkipsKappaZero) {
    auto r = crosscheck({0, 1, 1, 2, 2});
    EXPECT_TRUE(r.skipped);
}

TEST(Contour, TreeRecordsEveryVariable) {
    ContourSpec s;
    s.beta2 = Rational(2, 7);
    s.a = Rational(1, 2);
    s.b = 2;
    s.n = 3;
    s.k = 3;
    auto r = evaluate_nested(s, 1000000, true);
    std::vector<bool> seen(4, false);
    for (const auto& e : r.tree) seen[static_cast<std::size_t>(e.variable)] = true;
    EXPECT_TRUE(seen[1] && seen[2] && seen[3]);
}

TEST(Contour, TermBudgetEnforced) {
    ContourSpec s;
    s.beta2 = Rational(2, 7);
    s.a = Rational(1, 2);
    s.b = 2;
    s.n = 3;
    s.k = 5;
    EXPECT_THROW(evaluate_nested(s, 2), std::runtime_error);
}

TEST(Residue, SimplePoleMatchesLimit) {
    // f(u) = 1 / ((u - 1)(u - 3)): residue at 1 is -1/2
    LinearFactorTerm t(Rational(1));
    t.times(AffineForm::var(1, 0, Rational(-1)), -1);
    t.times(AffineForm::var(1, 0, Rational(-3)), -1);
    auto r = residue(t, 0, Rational(1), false);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].prefactor(), Rational(-1, 2));
    EXPECT_TRUE(r[0].is_constant());
}

TEST(Residue, DoublePoleByDerivative) {
    // f(u) = u^2 / (u - 2)^2: residue at 2 is d/du u^2 = 4
    LinearFactorTerm t(Rational(1));
    t.times(AffineForm::var(1, 0), 2);
    t.times(AffineForm::var(1, 0, Rational(-2)), -2);
    auto r = residue(t, 0, Rational(2), true);
    Rational sum(0);
    for (const auto& x : r) {
        ASSERT_TRUE(x.is_constant());
        sum += x.prefactor();
    }
    EXPECT_EQ(sum, Rational(4));
    EXPECT_THROW(residue(t, 0, Rational(2), false), PoleCollision);
}

TEST(Residue, SumOfResiduesVanishes) {
    // Residue closure: a rational function decaying like u^-2 has zero total residue.
    std::mt19937_64 g(1);
    for (int trial = 0; trial < 20; ++trial) {
        LinearFactorTerm t(Rational(1));
        t.times(AffineForm::var(1, 0, rnd(g, -3, 3, 4)), 1);
        std::vector<Rational> poles;
        for (int j = 0; j < 3; ++j) {
            Rational p = rnd(g, -5, 5, 3);
            poles.push_back(p);
            t.times(AffineForm::var(1, 0, -p), -1);
        }
        Rational total(0);
        for (const auto& p : constant_poles(t, 0))
            for (const auto& x : residue(t, 0, p, true)) total += x.prefactor();
        EXPECT_EQ(total, Rational(0));
    }
}
