#include "logmax/jacobi.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace logmax;

namespace {

MomentQuery query(Rational kappa, Rational a, Rational b, Rational n, int k) { return {kappa, a, b, n, k}; }

Rational random_rational(std::mt19937_64& g, long lo, long hi, long den) {
    long span = (hi - lo) * den;
    return Rational(lo * den + static_cast<long>(g() % static_cast<unsigned long>(span + 1)), den);
}

}  // namespace

TEST(JacobiMoments, BruteForceIntegerKappa) {
    for (int kappa : {1, 2})
        for (int n : {2, 3})
            for (int k : {1, 2, 3, 4, -1}) {
                const int a = 2, b = 1;
                Rational exact = oracle::jacobi_moment_bruteforce(kappa, a, b, n, k);
                EXPECT_EQ(moment_partition_sum(query(kappa, a, b, n, k)), exact)
                    << "kappa=" << kappa << " n=" << n << " k=" << k;
            }
}

TEST(JacobiMoments, ZeroKappaIsBetaMoment) {
    EXPECT_EQ(moment_partition_sum(query(0, 1, 0, 1, 2)), Rational(1, 2));
    for (int k = 1; k <= 6; ++k) {
        Rational a(3, 7), b(5, 2);
        Rational beta = oracle::rising(a + Rational(1), k) / oracle::rising(a + b + Rational(2), k);
        EXPECT_EQ(moment_partition_sum(query(0, a, b, Rational(4), k)), beta);
    }
}

TEST(JacobiMoments, SingleParticleIgnoresKappa) {
    for (int k : {1, 3, 5, -1})
        EXPECT_EQ(moment_partition_sum(query(Rational(2, 3), 2, 1, 1, k)), moment_partition_sum(query(0, 2, 1, 1, k)));
}

TEST(JacobiMoments, GeometricFormAgrees) {
    std::mt19937_64 g(11);
    for (int trial = 0; trial < 20; ++trial) {
        Rational kappa = random_rational(g, -2, 2, 7), a = random_rational(g, 0, 3, 5), b = random_rational(g, 0, 3, 3);
        Rational n = random_rational(g, 1, 4, 2);
        for (int k = 1; k <= 5; ++k) {
            auto q = query(kappa, a, b, n, k);
            try {
                EXPECT_EQ(moment_geometric(q), moment_partition_sum(q));
            } catch (const Divergence&) {
            }
        }
    }
}

TEST(JacobiMoments, NegativeShiftIndependent) {
    auto q = query(Rational(1, 2), Rational(7, 3), Rational(1, 4), 3, -2);
    Rational ref = moment_partition_sum(q);
    for (int l = 0; l <= 4; ++l) EXPECT_EQ(moment_negative_lshift(q, l), ref) << l;
    q.k = -1;
    ref = moment_partition_sum(q);
    for (int l = 0; l <= 4; ++l) EXPECT_EQ(moment_negative_lshift(q, l), ref) << l;
}

TEST(JacobiMoments, NegativeShiftAtIntegerA) {
    // l = a + 1 makes single terms singular in a
    for (int a : {2, 3}) {
        auto q = query(Rational(-1, 5), a, Rational(3, 4), 3, -2);
        Rational ref = moment_partition_sum(q);
        for (int l = 0; l <= 4; ++l) EXPECT_EQ(moment_negative_lshift(q, l), ref) << a << " " << l;
    }
}

TEST(JacobiMoments, InverseMomentClosedForms) {
    std::mt19937_64 g(3);
    for (int trial = 0; trial < 10; ++trial) {
        Rational t = random_rational(g, 0, 1, 11), a = random_rational(g, 2, 5, 3), b = random_rational(g, 0, 3, 4);
        if (t.is_zero() || a == t) continue;
        Rational one(1);
        Rational inv1 = (one + a + b + t) / a;
        Rational inv2 = (a + t + b + one) * (a * (a + b) + t) / ((a - one) * a * (a - t));
        EXPECT_EQ(moment_partition_sum(query(-t, a, b, 0, -1)), inv1);
        EXPECT_EQ(moment_partition_sum(query(-t, a, b, 0, -2)), inv2);
    }
}

TEST(JacobiMoments, DualityMap) {
    std::mt19937_64 g(5);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Rational kappa = random_rational(g, -3, -1, 4), a = random_rational(g, 1, 4, 3), b = random_rational(g, 1, 4, 5);
        Rational n = random_rational(g, 0, 2, 3);
        for (int k : {1, 2, 3, -1}) {
            auto q = query(kappa, a, b, n, k);
            try {
                EXPECT_EQ(moment_partition_sum(q), moment_partition_sum(duality_map(q)));
                ++checked;
            } catch (const Divergence&) {
            }
        }
    }
    EXPECT_GT(checked, 60);
}

TEST(JacobiMoments, PerPartitionSumsToTotal) {
    auto q = query(Rational(1, 3), Rational(2), Rational(1, 2), Rational(5), 5);
    Rational sum(0);
    for (const auto& c : moment_per_partition(q)) {
        ASSERT_TRUE(c.value.has_value()) << c.partition;
        sum += *c.value;
    }
    EXPECT_EQ(sum, moment_partition_sum(q));
}

TEST(JacobiMoments, LaguerreSmallMoments) {
    Rational kappa(2, 5), a(3, 2), n(4);
    Rational one(1), d = one + a + kappa * (n - one);
    EXPECT_EQ(laguerre_moment(query(kappa, a, 0, n, 1)), d);
    EXPECT_EQ(laguerre_moment(query(kappa, a, 0, n, 2)), d * (Rational(2) + a + Rational(2) * kappa * (n - one)));
}

TEST(JacobiMoments, LaguerreIsLargeBLimit) {
    Rational kappa(1, 2), a(1), n(3);
    for (int k = 1; k <= 4; ++k) {
        double lag = laguerre_moment(query(kappa, a, 0, n, k)).to_double();
        double bb = 1e6;
        double jac = moment_partition_sum(query(kappa, a, Rational(1000000), n, k)).to_double() * std::pow(bb, k);
        EXPECT_NEAR(jac / lag, 1.0, 1e-4) << k;
    }
}

TEST(JacobiMoments, SelbergAgainstDirectIntegral) {
    // Integer parameters: Selberg equals the brute-force normalization integral.
    for (int kappa : {1, 2})
        for (int n : {2, 3}) {
            const int a = 1, b = 2;
            oracle::Multi v = oracle::vandermonde_power(n, kappa);
            Rational z(0);
            for (const auto& [e, c] : v) {
                Rational w{c, mpz_class(1)};
                for (int i = 0; i < n; ++i) w *= oracle::beta_int(a + e[static_cast<std::size_t>(i)] + 1, b + 1);
                z += w;
            }
            auto s = selberg(kappa, a, b, n);
            ASSERT_TRUE(s.is_rational());
            EXPECT_EQ(s.coefficient, z);
        }
    auto half = selberg(Rational(1, 2), Rational(0), Rational(0), 1);
    EXPECT_TRUE(half.is_rational());
    EXPECT_EQ(half.coefficient, Rational(1));
    auto g = selberg(Rational(1, 3), Rational(1, 5), Rational(0), 2);
    EXPECT_FALSE(g.is_rational());
}

TEST(JacobiMoments, DivergenceNamesFactor) {
    // <y^-1> needs a > 0
    try {
        moment_partition_sum(query(0, 0, 1, 1, -1));
        FAIL() << "expected divergence";
    } catch (const Divergence& e) {
        EXPECT_FALSE(std::string(e.what()).empty());
    }
}
