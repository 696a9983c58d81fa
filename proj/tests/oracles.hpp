#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the partition-sum or residue engines.

#include "logmax/rational.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <map>
#include <vector>

namespace oracle {

using logmax::Rational;
using Exponents = std::vector<int>;
using Multi = std::map<Exponents, mpz_class>;

/// Number of partitions of k, by the coin-change recursion.
inline long partition_count(int k) {
    std::vector<long> p(static_cast<std::size_t>(k + 1), 0);
    p[0] = 1;
    for (int part = 1; part <= k; ++part)
        for (int s = part; s <= k; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    return p[static_cast<std::size_t>(k)];
}

inline Multi multiply(const Multi& x, const Multi& y) {
    Multi r;
    for (const auto& [ex, cx] : x)
        for (const auto& [ey, cy] : y) {
            Exponents e(ex.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
            r[e] += cx * cy;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

inline Multi monomial(int nvars, int var, int power, long coeff = 1) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var)] = power;
    return {{e, mpz_class(coeff)}};
}

inline Multi add(Multi x, const Multi& y) {
    for (const auto& [e, c] : y) x[e] += c;
    return x;
}

/// prod_{i<j} (y_i - y_j)^{2 kappa} expanded into monomials.
inline Multi vandermonde_power(int n, int kappa) {
    Multi r{{Exponents(static_cast<std::size_t>(n), 0), mpz_class(1)}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Multi d = add(monomial(n, i, 1), monomial(n, j, 1, -1));
            for (int p = 0; p < 2 * kappa; ++p) r = multiply(r, d);
        }
    return r;
}

/// Beta(p, q) for positive integers.
inline Rational beta_int(long p, long q) {
    return logmax::factorial(p - 1) * logmax::factorial(q - 1) / logmax::factorial(p + q - 1);
}

/// <(1/n) sum y_i^k> over prod y^a (1-y)^b |Delta|^{2 kappa} on [0,1]^n by direct integration of
/// every monomial. Integer kappa >= 0, a, b >= 0; a + k >= 0 is required for negative k.
inline Rational jacobi_moment_bruteforce(int kappa, int a, int b, int n, int k) {
    Multi v = vandermonde_power(n, kappa);
    Rational num(0), den(0);
    for (const auto& [e, c] : v) {
        Rational w{c, mpz_class(1)};
        Rational base = w, shifted = w;
        for (int i = 0; i < n; ++i) {
            base *= beta_int(a + e[static_cast<std::size_t>(i)] + 1, b + 1);
            int extra = i == 0 ? k : 0;
            shifted *= beta_int(a + e[static_cast<std::size_t>(i)] + extra + 1, b + 1);
        }
        den += base;
        num += shifted;
    }
    return num / den;
}

/// Circular gas prod |1 + z_i|^{2 mu} prod |z_i - z_j|^{2 kappa}, z = e^{i theta}, integer mu and kappa:
/// <cos(k theta_1)> as a ratio of constant terms of Laurent polynomials.
inline Rational circular_cos_moment(int kappa, int mu, int n, int k) {
    // |1+z|^2 = z^{-1} (1+z)^2, |z_i - z_j|^2 = -(z_i - z_j)^2 / (z_i z_j).
    Multi w{{Exponents(static_cast<std::size_t>(n), 0), mpz_class(1)}};
    for (int i = 0; i < n; ++i) {
        Multi f = add(add(monomial(n, i, -1), monomial(n, i, 0, 2)), monomial(n, i, 1));
        for (int p = 0; p < mu; ++p) w = multiply(w, f);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Exponents e(static_cast<std::size_t>(n), 0);
            Multi g;
            e[static_cast<std::size_t>(i)] = 1;
            e[static_cast<std::size_t>(j)] = -1;
            g[e] = -1;
            e[static_cast<std::size_t>(i)] = -1;
            e[static_cast<std::size_t>(j)] = 1;
            g[e] = -1;
            g[Exponents(static_cast<std::size_t>(n), 0)] = 2;
            for (int p = 0; p < kappa; ++p) w = multiply(w, g);
        }
    mpz_class ct0 = 0, ctk = 0;
    for (const auto& [e, c] : w) {
        bool rest_zero = true;
        for (int i = 1; i < n; ++i) rest_zero = rest_zero && e[static_cast<std::size_t>(i)] == 0;
        if (!rest_zero) continue;
        if (e[0] == 0) ct0 += c;
        if (e[0] == k || e[0] == -k) ctk += c;
    }
    return Rational(ctk, mpz_class(2 * ct0));
}

/// One-particle <cos(k theta)> under (2 + 2 cos theta)^mu by adaptive quadrature.
inline double circular_cos_quadrature(double mu, int k) {
    using boost::math::quadrature::gauss_kronrod;
    auto w = [&](double t) { return std::pow(2 + 2 * std::cos(t), mu); };
    double z = gauss_kronrod<double, 61>::integrate(w, 0.0, M_PI, 15, 1e-14);
    double m = gauss_kronrod<double, 61>::integrate([&](double t) { return w(t) * std::cos(k * t); }, 0.0, M_PI, 15, 1e-14);
    return m / z;
}

/// Pochhammer (x)_m.
inline Rational rising(const Rational& x, int m) {
    Rational r(1);
    for (int i = 0; i < m; ++i) r *= x + Rational(i);
    return r;
}

}  // namespace oracle
