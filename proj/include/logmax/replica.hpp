#pragma once

// Replica (n = 0) disorder averages of the three log-correlated models,
// freezing at beta = 1, and the derived ensembles.
//
// Everything is built as a sum of factored terms in the indeterminate beta
// with kappa = -beta^2 and kappa*n = 0.

#include "logmax/error.hpp"
#include "logmax/factored_term.hpp"
#include "logmax/jacobi.hpp"
#include "logmax/partitions.hpp"
#include "logmax/rational.hpp"
#include "logmax/rational_function.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logmax {

enum class Model { gue, lcgp, fbm0, laguerre, gaussian };

inline std::string to_string(Model m) {
    switch (m) {
        case Model::gue: return "gue";
        case Model::lcgp: return "lcgp";
        case Model::fbm0: return "fbm0";
        case Model::laguerre: return "laguerre";
        case Model::gaussian: return "gaussian";
    }
    return "?";
}

inline Model parse_model(const std::string& s) {
    for (auto m : {Model::gue, Model::lcgp, Model::fbm0, Model::laguerre, Model::gaussian})
        if (to_string(m) == s) return m;
    throw std::invalid_argument("unknown model '" + s + "' (gue, lcgp, fbm0, laguerre, gaussian)");
}

/// Model and its background parameters over a coefficient field F.
template <class F>
struct ModelSpecT {
    Model model = Model::gue;
    F abar{0};
    F bbar{0};
    F q{1};  // GUE weight exponent
};
using ModelSpec = ModelSpecT<Rational>;

/// Name of the position variable the model reports moments in.
inline std::string position_variable(Model m) {
    switch (m) {
        case Model::gue: return "x";
        case Model::laguerre:
        case Model::gaussian: return "z";
        default: return "y";
    }
}

/// n = 0 Jacobi parameters as polynomials in beta.
template <class F>
JacobiParams<F> replica_params(const ModelSpecT<F>& m) {
    using P = Polynomial<F>;
    P beta = P::variable("beta");
    P t = beta * beta;
    JacobiParams<F> p;
    p.kappa = -t;
    p.kappa_n = P(std::vector<F>{F(0)}, "beta");
    const F half = F(1) / F(2);
    switch (m.model) {
        case Model::gue:
            p.a = P(std::vector<F>{m.q * half}, "beta") + t * P(half);
            p.b = p.a;
            break;
        case Model::lcgp:
            p.a = beta * P(m.abar);
            p.b = beta * P(m.bbar);
            break;
        case Model::fbm0:
            // a = 2 n beta^2 vanishes at n = 0
            p.a = P(std::vector<F>{F(0)}, "beta");
            p.b = p.a;
            break;
        case Model::laguerre:
            p.a = beta * P(m.abar);
            p.b = P(std::vector<F>{F(0)}, "beta");
            break;
        case Model::gaussian:
            throw std::invalid_argument("the Gaussian model is a limit in abar; use gaussian_moments");
    }
    return p;
}

/// Terms of the disorder-averaged <y^k> (<z^k> for Laguerre) as functions of beta.
template <class F>
std::vector<FactoredTerm<F>> disorder_terms(const ModelSpecT<F>& m, int k) {
    auto p = replica_params(m);
    if (m.model != Model::laguerre) return moment_terms(k, p);
    auto terms = moment_terms(k, p, Ensemble::laguerre);
    // physical z is the Laguerre variable divided by beta
    for (auto& t : terms) t.times(Polynomial<F>::variable("beta"), -k);
    return terms;
}

/// Disorder average via the explicit n = 0 product formula, k > 0.
template <class F>
std::vector<FactoredTerm<F>> disorder_terms_explicit(const ModelSpecT<F>& m, int k) {
    using P = Polynomial<F>;
    if (k <= 0) throw std::invalid_argument("explicit n=0 formula is for positive k");
    if (m.model == Model::laguerre) throw std::invalid_argument("explicit n=0 formula is for Jacobi-type models");
    auto par = replica_params(m);
    P t = -par.kappa;
    auto c = [](long v) { return P(F(v)); };
    std::vector<FactoredTerm<F>> out;
    for (const auto& lam : enumerate_partitions(k)) {
        const int l = lam.length();
        FactoredTerm<F> term(lam.str());
        long fact = 1;
        for (int v = 2; v < lam[1]; ++v) fact *= v;
        term.times(F(-k) * F(fact) * F(fact));
        term.times(t, 1);
        for (int i = 2; i <= l; ++i) term.times_pochhammer(t * c(i - 1), lam[i], 2);
        for (int i = 1; i <= l; ++i) {
            term.times_pochhammer(par.a + c(1) + t * c(i), lam[i], 1);
            term.times_pochhammer(par.a + par.b + c(2) + t * c(i + 1), lam[i], -1);
            term.times_pochhammer(c(1) + t * c(i - l), lam[i], -1);
            term.times_pochhammer(t * c(i - l - 1), lam[i], -1);
        }
        for (int i = 1; i <= l; ++i)
            for (int j = i + 1; j <= l; ++j) {
                term.times(c(lam[i] - lam[j]) + t * c(i - j), 1);
                term.times(t * c(i - j), -1);
                term.times_pochhammer(t * c(i - j - 1), lam[i] - lam[j], 1);
                term.times_pochhammer(c(1) + t * c(i + 1 - j), lam[i] - lam[j], -1);
            }
        out.push_back(std::move(term));
    }
    return out;
}

/// Disorder average as an exact rational function of beta.
template <class F>
RationalFunction<F> disorder_moment(const ModelSpecT<F>& m, int k) {
    return to_rational_function(disorder_terms(m, k), "beta");
}

/// Disorder average at a given beta.
template <class F>
F disorder_moment_at(const ModelSpecT<F>& m, int k, const F& beta) {
    return limit_at(disorder_terms(m, k), beta);
}

/// Frozen moment: the beta -> 1 limit of the disorder average.
template <class F>
F freeze(const ModelSpecT<F>& m, int k) {
    return limit_at(disorder_terms(m, k), F(1));
}

/// Frozen <y^j> (or <z^j>) for j = 0..kmax.
template <class F>
std::vector<F> frozen_moments(const ModelSpecT<F>& m, int kmax) {
    std::vector<F> out{F(1)};
    for (int k = 1; k <= kmax; ++k) out.push_back(freeze(m, k));
    return out;
}

/// Per-partition frozen contributions; empty where a single term is singular at beta = 1.
inline std::vector<PartitionContribution> frozen_per_partition(const ModelSpec& m, int k) {
    std::vector<PartitionContribution> out;
    auto parts = enumerate_partitions(k < 0 ? -k : k);
    auto terms = disorder_terms(m, k);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        PartitionContribution c{parts[i], std::nullopt};
        try {
            c.value = limit_at(terms[i], Rational(1));
        } catch (const Divergence&) {
        }
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Moment bookkeeping

namespace detail {
inline long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace detail

/// Moments of alpha + gamma Y from the moments of Y (m[0] = 1).
template <class F>
std::vector<F> affine_moments(const std::vector<F>& m, const F& alpha, const F& gamma) {
    std::vector<F> out;
    for (std::size_t k = 0; k < m.size(); ++k) {
        F s(0);
        for (std::size_t j = 0; j <= k; ++j) {
            F term = F(detail::binom(static_cast<long>(k), static_cast<long>(j)));
            for (std::size_t r = 0; r < k - j; ++r) term = term * alpha;
            for (std::size_t r = 0; r < j; ++r) term = term * gamma;
            s = s + term * m[j];
        }
        out.push_back(s);
    }
    return out;
}

/// Central moments from raw moments.
template <class F>
std::vector<F> central_moments(const std::vector<F>& m) {
    if (m.size() < 2) return m;
    return affine_moments(m, F(0) - m[1], F(1));
}

/// Cumulants kappa_1..kappa_K from raw moments m_0..m_K; entry 0 is unused (0).
template <class F>
std::vector<F> moments_to_cumulants(const std::vector<F>& m) {
    std::vector<F> c(m.size(), F(0));
    for (std::size_t n = 1; n < m.size(); ++n) {
        F s = m[n];
        for (std::size_t j = 1; j < n; ++j)
            s = s - F(detail::binom(static_cast<long>(n - 1), static_cast<long>(j - 1))) * c[j] * m[n - j];
        c[n] = s;
    }
    return c;
}

/// Frozen moments in the model's own position variable (x for GUE, y otherwise).
template <class F>
std::vector<F> observable_moments(const ModelSpecT<F>& m, int kmax) {
    auto y = frozen_moments(m, kmax);
    if (m.model == Model::gue) return affine_moments(y, F(1), F(-2));
    return y;
}

/// Shape statistics with surds kept as squares.
template <class F>
struct ShapeStats {
    F mean;
    F variance;
    F third_cumulant;
    F fourth_cumulant;
    F skewness_squared;  // kappa_3^2 / kappa_2^3, sign is that of kappa_3
    F kurtosis;          // kappa_4 / kappa_2^2
};

template <class F>
ShapeStats<F> shape_stats(const std::vector<F>& raw) {
    if (raw.size() < 5) throw std::invalid_argument("shape_stats needs moments up to order 4");
    auto c = moments_to_cumulants(raw);
    ShapeStats<F> s{c[1], c[2], c[3], c[4], F(0), F(0)};
    if (detail::zero_of(c[2])) throw Divergence("degenerate distribution, variance is zero");
    s.skewness_squared = c[3] * c[3] / (c[2] * c[2] * c[2]);
    s.kurtosis = c[4] / (c[2] * c[2]);
    return s;
}

// ---------------------------------------------------------------------------
// Derived ensembles

/// Frozen Laguerre moment <z^k> at edge charge abar.
template <class F>
F laguerre_frozen(const F& abar, int k) {
    ModelSpecT<F> m;
    m.model = Model::laguerre;
    m.abar = abar;
    return freeze(m, k);
}

/// Disorder-averaged <z^p>, z = sqrt(8 abar)(y - 1/2), a = b = beta abar, abar -> infinity.
/// Coefficients live in Q(beta); p must be even.
inline RationalFunctionQ gaussian_moment(int p) {
    using F = RationalFunctionQ;
    using P = Polynomial<F>;
    if (p < 0 || p % 2 != 0) throw std::invalid_argument("gaussian_moment needs an even p >= 0");
    if (p == 0) return F(1L);
    F beta = F::variable("beta");
    P abar = P::variable("abar");
    JacobiParams<F> par;
    par.kappa = P(std::vector<F>{F(0L) - beta * beta}, "abar");
    par.kappa_n = P(std::vector<F>{F(0L)}, "abar");
    par.a = abar * P(beta);
    par.b = par.a;
    std::vector<FactoredTerm<F>> terms;
    F s8(pow(Rational(8), p / 2));
    for (int j = 0; j <= p; ++j) {
        F coef = s8 * F(binomial(p, j)) * F(pow(Rational(-1, 2), p - j));
        std::vector<FactoredTerm<F>> yj;
        if (j == 0) yj.emplace_back("1");
        else yj = moment_terms(j, par);
        for (auto& t : yj) {
            t.times(coef);
            t.times(abar, p / 2);
            terms.push_back(std::move(t));
        }
    }
    F v;
    try {
        v = limit_at_infinity(terms);
    } catch (const Divergence& e) {
        throw InvariantViolation(std::string("Gaussian limit: <(y-1/2)^p> does not scale as abar^(-p/2): ") + e.what());
    }
    if (v.is_zero()) throw InvariantViolation("Gaussian limit: leading coefficient vanishes");
    return v;
}

/// Disorder-averaged cumulants kappa_2, kappa_4, ..., kappa_pmax of z, as functions of beta.
/// Entry i of the result is the cumulant of order i (odd orders are zero).
inline std::vector<RationalFunctionQ> gaussian_cumulants(int pmax) {
    using F = RationalFunctionQ;
    std::vector<F> m{F(1L)};
    for (int p = 1; p <= pmax; ++p) m.push_back(p % 2 ? F(0L) : gaussian_moment(p));
    return moments_to_cumulants(m);
}

/// Gaussian cumulant of even order p at a given beta (frozen value at beta = 1).
inline Rational gaussian_cumulant(const Rational& beta, int p) {
    if (p < 2 || p % 2 != 0) throw std::invalid_argument("gaussian_cumulant needs an even p >= 2");
    return gaussian_cumulants(p)[static_cast<std::size_t>(p)](beta);
}

/// CONJECTURE: <cos k theta> of the circular gas with weight |1 + e^{i theta}|^{2 mu}
/// equals (-1)^k <y^k> at a = -mu - 1 - kappa (n - 1), b = 2 mu.
inline Rational circular_conjecture_eval(const Rational& kappa, const Rational& mu, const Rational& n, int k) {
    if (k < 1) throw std::invalid_argument("circular conjecture is stated for k >= 1");
    using P = Polynomial<Rational>;
    JacobiParams<Rational> p;
    p.kappa = P::linear(kappa, Rational(1), "x");
    p.kappa_n = p.kappa * P(n);
    p.a = P(Rational(-1) - mu) - p.kappa * P(n - Rational(1));
    p.b = P(std::vector<Rational>{Rational(2) * mu}, "x");
    Rational v = limit_at(moment_terms(k, p), Rational(0));
    return k % 2 ? -v : v;
}

/// CONJECTURE: <Re((i - z)/(i + z))^k> of the Cauchy gas equals (-1)^k <y^k>
/// at a = -rho, b = 2 rho - 2 - 2 (n - 1) kappa.
inline Rational cauchy_conjecture_eval(const Rational& kappa, const Rational& rho, const Rational& n, int k) {
    if (k < 1) throw std::invalid_argument("Cauchy conjecture is stated for k >= 1");
    using P = Polynomial<Rational>;
    JacobiParams<Rational> p;
    p.kappa = P::linear(kappa, Rational(1), "x");
    p.kappa_n = p.kappa * P(n);
    p.a = P(std::vector<Rational>{-rho}, "x");
    p.b = P(Rational(2) * rho - Rational(2)) - P(Rational(2) * (n - Rational(1))) * p.kappa;
    Rational v = limit_at(moment_terms(k, p), Rational(0));
    return k % 2 ? -v : v;
}

}  // namespace logmax
