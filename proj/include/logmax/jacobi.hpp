#pragma once

// Integer moments of the beta-Jacobi density
//   prod_i y_i^a (1-y_i)^b |Delta(y)|^{2 kappa}   on [0,1]^n
// as sums over partitions of |k|.
//
// Every formula is written in terms of kappa and K = kappa*n. The factor
// (kappa n)_{lambda_1} / n is cancelled by hand to kappa (K+1)_{lambda_1-1},
// so n = 0 is an ordinary substitution.
//
// The Krasovsky prefactors and the semicircle weight of the GUE mapping are
// not computed anywhere: they cancel in normalized moments.

#include "logmax/error.hpp"
#include "logmax/factored_term.hpp"
#include "logmax/partitions.hpp"
#include "logmax/rational.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logmax {

struct MomentQuery {
    Rational kappa{0};
    Rational a{0};
    Rational b{0};
    Rational n{1};
    int k = 1;
};

/// Parameters as polynomials in one indeterminate over F.
template <class F>
struct JacobiParams {
    using Poly = Polynomial<F>;
    Poly kappa;
    Poly kappa_n;  // kappa * n
    Poly a;
    Poly b;
};

enum class Ensemble { jacobi, laguerre };

namespace detail {

template <class F>
Polynomial<F> cst(long v) {
    return Polynomial<F>(F(v));
}

// A_lambda of the partition sum, n-free form.
template <class F>
void amplitude(FactoredTerm<F>& t, const Partition& lam, const JacobiParams<F>& p) {
    using P = Polynomial<F>;
    const int k = lam.size();
    const int l = lam.length();
    const P& ka = p.kappa;
    const P& K = p.kappa_n;
    auto c = [](long v) { return cst<F>(v); };

    long fact = 1;
    for (int m = 2; m < lam[1]; ++m) fact *= m;
    t.times(F(static_cast<long>(k) * fact));
    t.times_pochhammer(ka * c(l - 1) + c(1), lam[1], -1);
    for (int i = 2; i <= l; ++i) {
        t.times_pochhammer(ka * c(1 - i), lam[i], 1);
        t.times_pochhammer(ka * c(l - i) + c(1), lam[i], -1);
    }
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            t.times(ka * c(j - i) + c(lam[i] - lam[j]), 1);
            t.times(ka * c(j - i), -1);
        }
    t.times(ka, 1);
    t.times_pochhammer(K + c(1), lam[1] - 1, 1);
    for (int i = 2; i <= l; ++i) t.times_pochhammer(K - ka * c(i - 1), lam[i], 1);
    for (int i = 1; i <= l; ++i) t.times_pochhammer(ka * c(l - i + 1), lam[i], -1);
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            t.times_pochhammer(ka * c(j - i + 1), lam[i] - lam[j], 1);
            t.times_pochhammer(ka * c(j - i - 1) + c(1), lam[i] - lam[j], -1);
        }
}

}  // namespace detail

/// One term A_lambda a^{+-}_lambda of the moment of order sign*|lambda|.
template <class F>
FactoredTerm<F> moment_term(const Partition& lam, const JacobiParams<F>& p, bool negative,
                            Ensemble ens = Ensemble::jacobi) {
    using P = Polynomial<F>;
    auto c = [](long v) { return detail::cst<F>(v); };
    FactoredTerm<F> t(lam.str());
    detail::amplitude(t, lam, p);
    const P& ka = p.kappa;
    const P& K = p.kappa_n;
    for (int i = 1; i <= lam.length(); ++i) {
        if (!negative) {
            t.times_pochhammer(p.a + c(1) + K - ka * c(i), lam[i], 1);
            if (ens == Ensemble::jacobi)
                t.times_pochhammer(p.a + p.b + c(2) + c(2) * K - ka * c(i + 1), lam[i], -1);
        } else {
            if (ens == Ensemble::laguerre) throw std::invalid_argument("negative Laguerre moments are not implemented");
            t.times_pochhammer(p.a + c(1) + ka * c(i - 1), -lam[i], 1);
            t.times_pochhammer(p.a + p.b + c(2) + K + ka * c(i - 2), -lam[i], -1);
        }
    }
    return t;
}

/// All terms of <(1/n) sum_j y_j^k>, k != 0 of either sign.
template <class F>
std::vector<FactoredTerm<F>> moment_terms(int k, const JacobiParams<F>& p, Ensemble ens = Ensemble::jacobi) {
    if (k == 0) throw std::invalid_argument("moment order must be nonzero");
    std::vector<FactoredTerm<F>> out;
    for (const auto& lam : enumerate_partitions(k < 0 ? -k : k)) out.push_back(moment_term(lam, p, k < 0, ens));
    return out;
}

/// Positive moments in the box-product form; the box (1,1) of the
/// (j-1-(i-1)kappa) product is removed analytically.
template <class F>
std::vector<FactoredTerm<F>> moment_terms_geometric(int k, const JacobiParams<F>& p) {
    using P = Polynomial<F>;
    if (k <= 0) throw std::invalid_argument("geometric form is for positive moments");
    auto c = [](long v) { return detail::cst<F>(v); };
    const P& ka = p.kappa;
    const P& K = p.kappa_n;
    std::vector<FactoredTerm<F>> out;
    for (const auto& lam : enumerate_partitions(k)) {
        FactoredTerm<F> t(lam.str());
        t.times(F(k));
        t.times(ka);
        for (auto [i, j] : lam.boxes()) {
            const int arm = lam.arm(i, j), leg = lam.leg(i, j);
            if (!(i == 1 && j == 1)) {
                t.times(c(j - 1) - ka * c(i - 1), 1);
                t.times(K - ka * c(i - 1) + c(j - 1), 1);
            }
            t.times(p.a + K - ka * c(i) + c(j), 1);
            t.times(c(arm) + ka * c(leg) + c(1), -1);
            t.times(c(arm) + ka * c(leg) + ka, -1);
            t.times(p.a + p.b + c(1) + c(2) * K - ka * c(i + 1) + c(j), -1);
        }
        out.push_back(std::move(t));
    }
    return out;
}

/// Negative moment <(1/n) sum y^{-k}> through the shifted representation with integer l >= 0.
template <class F>
std::vector<FactoredTerm<F>> moment_terms_negative_lshift(int k, const JacobiParams<F>& p, int l) {
    using P = Polynomial<F>;
    if (k <= 0) throw std::invalid_argument("k is the magnitude of the negative order");
    if (l < 0) throw std::invalid_argument("l must be nonnegative");
    auto c = [](long v) { return detail::cst<F>(v); };
    const P& ka = p.kappa;
    std::vector<FactoredTerm<F>> out;
    for (const auto& lam : enumerate_partitions(k)) {
        FactoredTerm<F> t(lam.str());
        detail::amplitude(t, lam, p);
        for (int i = 1; i <= lam.length(); ++i) {
            P x1 = p.a - c(l) + c(1) + ka * c(i - 1);
            P x2 = p.a - c(l) + p.b + c(2) + p.kappa_n + ka * c(i - 2);
            t.times_pochhammer(x1, l - lam[i], 1);
            t.times_pochhammer(x2, l - lam[i], -1);
            t.times_pochhammer(x2, l, 1);
            t.times_pochhammer(x1, l, -1);
        }
        out.push_back(std::move(t));
    }
    return out;
}

/// <J^{1/kappa}_lambda> under the Jacobi measure.
template <class F>
FactoredTerm<F> jack_average_term(const Partition& lam, const JacobiParams<F>& p) {
    using P = Polynomial<F>;
    auto c = [](long v) { return detail::cst<F>(v); };
    FactoredTerm<F> t(lam.str());
    t.times(p.kappa, -lam.size());
    for (int i = 1; i <= lam.length(); ++i) {
        t.times_pochhammer(p.a + c(1) + p.kappa_n - p.kappa * c(i), lam[i], 1);
        t.times_pochhammer(p.a + p.b + c(2) + c(2) * p.kappa_n - p.kappa * c(i + 1), lam[i], -1);
        t.times_pochhammer(p.kappa_n - p.kappa * c(i - 1), lam[i], 1);
    }
    return t;
}

/// gamma^lambda_(k)(alpha) = k alpha theta / (c(lambda,alpha,1) c(lambda,alpha,alpha)).
inline Rational gamma_coefficient(const Partition& lam, const Rational& alpha) {
    return Rational(lam.size()) * alpha * theta_onek(lam, alpha) /
           (c_norm(lam, alpha, Rational(1)) * c_norm(lam, alpha, alpha));
}

// ---------------------------------------------------------------------------
// Concrete rational evaluation

/// kappa -> kappa + x with the other parameters fixed; the value is the limit x -> 0.
inline JacobiParams<Rational> perturbed_params(const MomentQuery& q) {
    using P = Polynomial<Rational>;
    JacobiParams<Rational> p;
    p.kappa = P::linear(q.kappa, Rational(1), "x");
    p.kappa_n = P::linear(q.kappa * q.n, q.n, "x");
    p.a = P(std::vector<Rational>{q.a}, "x");
    p.b = P(std::vector<Rational>{q.b}, "x");
    return p;
}

inline Rational moment_partition_sum(const MomentQuery& q) {
    return limit_at(moment_terms(q.k, perturbed_params(q)), Rational(0));
}

inline Rational moment_geometric(const MomentQuery& q) {
    return limit_at(moment_terms_geometric(q.k, perturbed_params(q)), Rational(0));
}

inline Rational moment_negative_lshift(const MomentQuery& q, int l) {
    if (q.k >= 0) throw std::invalid_argument("moment_negative_lshift needs k < 0");
    // terms can be singular in a alone (a = l - 1), so a moves with the perturbation too
    auto p = perturbed_params(q);
    p.a = Polynomial<Rational>::linear(q.a, Rational(1), "x");
    return limit_at(moment_terms_negative_lshift(-q.k, p, l), Rational(0));
}

inline Rational laguerre_moment(const MomentQuery& q) {
    return limit_at(moment_terms(q.k, perturbed_params(q), Ensemble::laguerre), Rational(0));
}

inline Rational jack_average(const Partition& lam, const MomentQuery& q) {
    if (lam.empty()) return Rational(1);
    return limit_at(jack_average_term(lam, perturbed_params(q)), Rational(0));
}

struct PartitionContribution {
    Partition partition;
    std::optional<Rational> value;  // empty when this term alone is singular
};

/// Per-partition breakdown. Individual terms may be singular where the sum is not.
inline std::vector<PartitionContribution> moment_per_partition(const MomentQuery& q) {
    std::vector<PartitionContribution> out;
    auto p = perturbed_params(q);
    for (const auto& lam : enumerate_partitions(q.k < 0 ? -q.k : q.k)) {
        PartitionContribution c{lam, std::nullopt};
        try {
            c.value = limit_at(moment_term(lam, p, q.k < 0), Rational(0));
        } catch (const Divergence&) {
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// kappa' = 1/kappa, n' = -kappa n, a' = -a/kappa, b' = -b/kappa.
/// With kappa = -beta^2 this is beta' = 1/beta, n' = beta^2 n, a' = a/beta^2, b' = b/beta^2.
inline MomentQuery duality_map(const MomentQuery& q) {
    if (q.kappa.is_zero()) throw std::domain_error("duality map needs kappa != 0");
    MomentQuery d = q;
    d.kappa = Rational(1) / q.kappa;
    d.n = -q.kappa * q.n;
    d.a = -q.a / q.kappa;
    d.b = -q.b / q.kappa;
    return d;
}

// ---------------------------------------------------------------------------
// Selberg integral as an exact Gamma product

/// coefficient * prod_r Gamma(r)^{e_r}, r in (0,1).
struct GammaProduct {
    Rational coefficient{1};
    std::map<Rational, int> gammas;

    bool is_rational() const { return gammas.empty(); }

    std::string str() const {
        std::string s = coefficient.str();
        for (const auto& [r, e] : gammas) {
            s += " * Gamma(" + r.str() + ")";
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    double to_double() const {
        double v = coefficient.to_double();
        for (const auto& [r, e] : gammas) v *= std::pow(std::tgamma(r.to_double()), e);
        return v;
    }

    /// Multiply by Gamma(x)^e.
    void times_gamma(const Rational& x, int e) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
        Rational f = x - Rational(mpq_class(fl));
        long m = fl.get_si();
        if (f.is_zero()) {
            if (m <= 0) throw Divergence("Gamma function pole", "Gamma(" + x.str() + ")");
            coefficient *= pow(factorial(m - 1), e);
            return;
        }
        // Gamma(f + m) = Gamma(f) (f)_m
        coefficient *= pow(pochhammer(f, m), e);
        int& slot = gammas[f];
        slot += e;
        if (slot == 0) gammas.erase(f);
    }
};

/// Selberg integral Sl_n(kappa, a, b) for positive integer n.
inline GammaProduct selberg(const Rational& kappa, const Rational& a, const Rational& b, int n) {
    if (n < 1) throw std::invalid_argument("selberg: n must be a positive integer");
    GammaProduct g;
    for (int j = 0; j < n; ++j) {
        g.times_gamma(a + Rational(1) + kappa * Rational(j), 1);
        g.times_gamma(b + Rational(1) + kappa * Rational(j), 1);
        g.times_gamma(Rational(1) + kappa * Rational(j + 1), 1);
        g.times_gamma(a + b + Rational(2) + kappa * Rational(n + j - 1), -1);
        g.times_gamma(Rational(1) + kappa, -1);
    }
    return g;
}

}  // namespace logmax
