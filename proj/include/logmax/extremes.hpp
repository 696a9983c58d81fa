#pragma once

// Value of the minimum V_m at the frozen point and its correlations with
// the position.
//
//   E exp(-n V_m) = Gamma(1-n) S(n),
//   S(n) = G(1) G(2+a) G(2+b) G(4+a+b-2n) / (G(1-n) G(2+a-n) G(2+b-n) G(4+a+b-n))
//
// with G the Barnes function. Position-value correlations are derivatives at
// s = 0 of the moments M_k(s) taken at beta = 1 with s = beta n held fixed.

#include "logmax/error.hpp"
#include "logmax/factored_term.hpp"
#include "logmax/jacobi.hpp"
#include "logmax/rational_function.hpp"
#include "logmax/replica.hpp"
#include "logmax/series.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace logmax {

using Real50 = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;

/// Quantity that is ill-defined for this model.
class BlockedQuantity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct VmSpec {
    Rational a{1};
    Rational b{1};
    int digits = 50;
};

/// Frozen Jacobi parameters of a model for V_m statistics.
inline VmSpec vm_spec_for(const ModelSpec& m, int digits = 50) {
    VmSpec s;
    s.digits = digits;
    switch (m.model) {
        case Model::gue:
            s.a = (m.q + Rational(1)) / Rational(2);
            s.b = s.a;
            return s;
        case Model::lcgp:
            s.a = m.abar;
            s.b = m.bbar;
            return s;
        case Model::fbm0:
            throw BlockedQuantity(
                "fbm0: a = 2n is n-dependent and the continued Laplace transform is not that of a positive "
                "probability (paper-flagged caveat); V_m statistics are not available for this model");
        default:
            throw std::invalid_argument("V_m statistics are defined for gue and lcgp only");
    }
}

template <class Real>
Real to_real(const Rational& r) {
    return Real(r.numerator().get_str()) / Real(r.denominator().get_str());
}

namespace detail {

template <class Real>
const std::vector<Real>& zeta_table(std::size_t n) {
    static thread_local std::vector<Real> z;
    while (z.size() < n) z.push_back(z.size() < 2 ? Real(0) : boost::math::zeta(Real(static_cast<int>(z.size()))));
    return z;
}

// log G(1+w) for |w| <= 1/2 from its Taylor series.
template <class Real>
Real log_barnes_g_near_one(const Real& w) {
    using std::log;
    const Real pi = boost::math::constants::pi<Real>();
    const Real gamma_e = boost::math::constants::euler<Real>();
    Real s = w / 2 * log(2 * pi) - (w + (1 + gamma_e) * w * w) / 2;
    const Real eps = std::numeric_limits<Real>::epsilon() / 16;
    Real wp = w * w * w;  // w^{k+1}
    for (int k = 2;; ++k) {
        const auto& z = zeta_table<Real>(static_cast<std::size_t>(k) + 1);
        Real term = z[static_cast<std::size_t>(k)] * wp / (k + 1);
        s += (k % 2 ? -term : term);
        if (abs(term) < eps * (1 + abs(s)) && k > 4) break;
        if (k > 20000) throw std::runtime_error("Barnes G series did not converge");
        wp *= w;
    }
    return s;
}

}  // namespace detail

/// log G(x) for real x > 0.
template <class Real>
Real log_barnes_g(const Real& x) {
    using std::floor;
    using std::lgamma;
    if (!(x > 0)) throw std::domain_error("log_barnes_g needs a positive argument");
    Real z = x - 1;
    Real m = floor(z + Real(1) / 2);
    Real w = z - m;
    Real s = detail::log_barnes_g_near_one(w);
    long mm = static_cast<long>(m);
    // G(1+w+m) = G(1+w) prod_{j=1}^{m} Gamma(w+j)
    for (long j = 1; j <= mm; ++j) s += boost::math::lgamma(w + Real(j));
    if (mm == -1) s -= boost::math::lgamma(w);
    return s;
}

/// log(Gamma(1-n) S(n)), the cumulant generating function of -V_m at n.
template <class Real>
Real vm_log_laplace(const VmSpec& spec, const Real& n) {
    if (!(n < 1)) throw std::domain_error("vm_laplace needs n < 1");
    const Real a = to_real<Real>(spec.a), b = to_real<Real>(spec.b);
    auto G = [](const Real& x) { return log_barnes_g(x); };
    Real v = boost::math::lgamma(1 - n);
    v += G(Real(1)) + G(2 + a) + G(2 + b) + G(4 + a + b - 2 * n);
    v -= G(1 - n) + G(2 + a - n) + G(2 + b - n) + G(4 + a + b - n);
    return v;
}

namespace detail {

template <class Real>
Real polygamma_any(int m, const Real& z) {
    if (m == 0) return boost::math::digamma(z);
    return boost::math::polygamma(m, z);
}

template <class Real>
Real phi_p(int p, const Real& z) {
    Real v = (z - 1) * polygamma_any(p - 1, z);
    if (p >= 2) v += (p - 1) * polygamma_any(p - 2, z);
    return v;
}

}  // namespace detail

/// p-th cumulant of V_m.
template <class Real>
Real vm_cumulant(const VmSpec& spec, int p) {
    if (p < 1) throw std::invalid_argument("cumulant order must be >= 1");
    using std::log;
    const Real a = to_real<Real>(spec.a), b = to_real<Real>(spec.b);
    const Real pi = boost::math::constants::pi<Real>();
    const Real gamma_e = boost::math::constants::euler<Real>();
    Real gp;
    if (p == 1) gp = -gamma_e - log(2 * pi);
    else if (p == 2) gp = gamma_e + pi * pi / 6;
    else {
        Real f = boost::math::factorial<Real>(static_cast<unsigned>(p - 1));
        gp = f * (boost::math::zeta(Real(p)) + boost::math::zeta(Real(p - 1)));
        if (p % 2) gp = -gp;
    }
    Real two_p = pow(Real(2), p) - 1;
    return two_p * detail::phi_p(p, 4 + a + b) - detail::phi_p(p, 2 + a) - detail::phi_p(p, 2 + b) + gp;
}

/// p-th derivative of vm_log_laplace at n = 0 by Richardson-extrapolated central differences.
template <class Real>
Real vm_log_laplace_derivative_fd(const VmSpec& spec, int p, int levels = 12, double h0 = 1.0 / 8) {
    auto f = [&](const Real& n) { return vm_log_laplace<Real>(spec, n); };
    std::vector<std::vector<Real>> R;
    Real h(h0);
    for (int lv = 0; lv < levels; ++lv, h /= 2) {
        Real d = 0;
        for (int j = 0; j <= p; ++j) {
            Real c = boost::math::binomial_coefficient<Real>(static_cast<unsigned>(p), static_cast<unsigned>(j));
            Real x = (Real(p) / 2 - j) * h;
            d += (j % 2 ? -c : c) * f(x);
        }
        d /= pow(h, p);
        std::vector<Real> row{d};
        Real four(1);
        for (int m = 1; m <= lv; ++m) {
            four *= 4;
            row.push_back(row[static_cast<std::size_t>(m - 1)] +
                          (row[static_cast<std::size_t>(m - 1)] - R.back()[static_cast<std::size_t>(m - 1)]) / (four - 1));
        }
        R.push_back(std::move(row));
    }
    return R.back().back();
}

/// Fixed-point decimal rendering with the given number of significant digits.
template <class Real>
std::string decimal_string(const Real& x, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

/// Decimal value of the p-th V_m cumulant at spec.digits significant digits.
inline std::string vm_cumulant_decimal(const VmSpec& spec, int p) {
    if (spec.digits <= 45) return decimal_string(vm_cumulant<Real50>(spec, p), spec.digits);
    if (spec.digits <= 95) return decimal_string(vm_cumulant<Real100>(spec, p), spec.digits);
    throw std::invalid_argument("precision above 95 digits is not supported");
}

/// Decimal value of E exp(-n V_m).
inline std::string vm_laplace_decimal(const VmSpec& spec, const Rational& n) {
    using std::exp;
    if (spec.digits <= 45) return decimal_string(Real50(exp(vm_log_laplace<Real50>(spec, to_real<Real50>(n)))), spec.digits);
    if (spec.digits <= 95)
        return decimal_string(Real100(exp(vm_log_laplace<Real100>(spec, to_real<Real100>(n)))), spec.digits);
    throw std::invalid_argument("precision above 95 digits is not supported");
}

// ---------------------------------------------------------------------------
// Position-value correlations

/// M_k(s): the frozen moment <y^k> (<z^k> for Laguerre) with s = beta n held fixed, beta -> 1.
inline RationalFunctionQ mbar_function(const ModelSpec& m, int k) {
    using F = RationalFunctionQ;
    using P = Polynomial<F>;
    if (m.model == Model::gaussian) throw std::invalid_argument("mbar_function is not available for the Gaussian model");
    const F s = F::variable("s");
    P beta = P::variable("beta");
    P t = beta * beta;
    JacobiParams<F> p;
    p.kappa = -t;
    p.kappa_n = -(beta * P(s));
    const F half(Rational(1, 2));
    switch (m.model) {
        case Model::gue:
            p.a = P(std::vector<F>{F(m.q) * half}, "beta") + t * P(half);
            p.b = p.a;
            break;
        case Model::lcgp:
            p.a = beta * P(F(m.abar));
            p.b = beta * P(F(m.bbar));
            break;
        case Model::fbm0:
            // a = 2 n beta^2 = 2 beta s
            p.a = beta * P(F(2L) * s);
            p.b = P(std::vector<F>{F(0L)}, "beta");
            break;
        case Model::laguerre:
            p.a = beta * P(F(m.abar));
            p.b = P(std::vector<F>{F(0L)}, "beta");
            break;
        default: break;
    }
    auto terms = moment_terms(k, p, m.model == Model::laguerre ? Ensemble::laguerre : Ensemble::jacobi);
    if (m.model == Model::laguerre)
        for (auto& x : terms) x.times(beta, -k);
    return limit_at(terms, F(1L));
}

/// M_k(s) in the model's position variable (x = 1 - 2y for GUE).
inline RationalFunctionQ mbar_observable(const ModelSpec& m, int k) {
    if (m.model != Model::gue || k < 0) return mbar_function(m, k);
    using F = RationalFunctionQ;
    std::vector<F> y{F(1L)};
    for (int j = 1; j <= k; ++j) y.push_back(mbar_function(m, j));
    return affine_moments(y, F(1L), F(-2L))[static_cast<std::size_t>(k)];
}

/// Taylor coefficients c_0..c_order of a rational function at 0.
inline std::vector<Rational> taylor_at_zero(const RationalFunctionQ& f, int order) {
    const std::size_t len = static_cast<std::size_t>(order + 1);
    auto coeffs = [&](const Polynomial<Rational>& p) {
        std::vector<Rational> c(len, Rational(0));
        for (int i = 0; i <= p.degree() && i <= order; ++i) c[static_cast<std::size_t>(i)] = p.coeff(i);
        return c;
    };
    auto den = coeffs(f.denominator());
    if (den[0].is_zero()) throw Divergence("M_k(s) has a pole at s = 0", f.denominator().str());
    return series::mul(coeffs(f.numerator()), series::inverse(den, len), len);
}

/// (-1)^p d^p/ds^p M_k(0): the order-p joint correlation of y^k (x^k for GUE) with V_m.
inline Rational position_value_correlation(const ModelSpec& m, int k, int p) {
    if (p < 1 || p > 2) throw std::invalid_argument("correlation order p must be 1 or 2");
    auto c = taylor_at_zero(mbar_observable(m, k), p);
    Rational v = c[static_cast<std::size_t>(p)] * factorial(p);
    return p % 2 ? -v : v;
}

struct ConditionalMoment {
    std::vector<double> value;
    std::string caveat;  // non-empty for fbm0
};

namespace detail {

// Derivative on a uniform grid; central inside, second-order one-sided at the ends.
inline std::vector<double> grid_derivative(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> d(n);
    if (n < 3) throw std::invalid_argument("grid needs at least 3 points");
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2 * h);
    d[0] = (-3 * f[0] + 4 * f[1] - f[2]) / (2 * h);
    d[n - 1] = (3 * f[n - 1] - 4 * f[n - 2] + f[n - 3]) / (2 * h);
    return d;
}

}  // namespace detail

/// E(y^k | V_m = v) = Q(v)^{-1} M_k(d/dv) Q(v) with M_k truncated at the given Taylor order.
/// v is a uniform grid and Q the sampled density of V_m on it.
inline ConditionalMoment conditional_moment(const ModelSpec& m, int k, const std::vector<double>& v,
                                            const std::vector<double>& Q, int order = 4) {
    if (v.size() != Q.size()) throw std::invalid_argument("grid and density sizes differ");
    if (v.size() < 3) throw std::invalid_argument("grid needs at least 3 points");
    for (double q : Q)
        if (!(q > 0)) throw std::domain_error("density must be strictly positive on the grid");
    const double h = v[1] - v[0];
    auto c = taylor_at_zero(mbar_observable(m, k), order);
    ConditionalMoment out;
    out.value.assign(v.size(), 0.0);
    std::vector<double> d = Q;
    for (int j = 0; j <= order; ++j) {
        if (j) d = detail::grid_derivative(d, h);
        double cj = c[static_cast<std::size_t>(j)].to_double();
        if (cj == 0.0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) out.value[i] += cj * d[i];
    }
    for (std::size_t i = 0; i < v.size(); ++i) out.value[i] /= Q[i];
    if (m.model == Model::fbm0) out.caveat = "paper-flagged caveat: fbm0 conditional moments need a more careful study";
    return out;
}

}  // namespace logmax
