#pragma once

// Univariate rational functions num/den over a field F, kept reduced:
// gcd(num, den) = 1, den monic, zero is 0/1. RationalFunction<F> is
// itself a field, so Q(x)(y) is RationalFunction<RationalFunction<Rational>>.

#include "logmax/error.hpp"
#include "logmax/polynomial.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace logmax {

template <class F>
class RationalFunction {
public:
    using Poly = Polynomial<F>;

    RationalFunction() : num_(), den_(F(1)) {}
    RationalFunction(long c) : num_(F(c)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(int c) : RationalFunction(static_cast<long>(c)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const F& c) : num_(c), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Poly p) : num_(std::move(p)), den_(F(1)) { den_.set_var(num_.var()); }  // NOLINT
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFunction variable(const std::string& var) { return RationalFunction(Poly::variable(var)); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    std::string var() const { return detail::merge_var(num_.var(), den_.var()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Value at x0; throws Divergence at a pole of the reduced form.
    F operator()(const F& x0) const {
        F d = den_(x0);
        if (detail::zero_of(d)) throw Divergence("rational function has a pole at " + to_string(x0), den_.str());
        return num_(x0) / d;
    }

    /// Limit at x0. Removable singularities are already cancelled by reduction.
    F limit_at(const F& x0) const { return (*this)(x0); }

    /// Degree of num minus degree of den (valuation at infinity with the opposite sign).
    int degree() const { return num_.degree() - den_.degree(); }

    /// f(1/x).
    RationalFunction reciprocal_argument() const {
        Poly n = num_.reversed(), d = den_.reversed();
        int shift = den_.degree() - num_.degree();
        Poly xs = pow(Poly::variable(var()), static_cast<unsigned>(shift < 0 ? -shift : shift));
        if (shift >= 0) n = n * xs;
        else d = d * xs;
        return RationalFunction(n, d);
    }

    /// f(g(x)) for a rational g.
    RationalFunction compose(const RationalFunction& g) const {
        RationalFunction acc(0L);
        const auto& c = num_.coefficients();
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * g + RationalFunction(*it);
        RationalFunction den(0L);
        const auto& e = den_.coefficients();
        for (auto it = e.rbegin(); it != e.rend(); ++it) den = den * g + RationalFunction(*it);
        return acc / den;
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, raw_tag{}); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction(0L);
        if (a.den_.degree() == 0 && b.den_.degree() == 0)
            return RationalFunction(a.num_ * b.num_, Poly(std::vector<F>{F(1)}, a.var()), raw_tag{});
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& x) { return os << x.str(); }

    std::string str() const {
        if (den_.degree() == 0) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (num_.degree() > 0 && detail::needs_parens(n)) n = "(" + n + ")";
        return n + "/(" + d + ")";
    }

private:
    struct raw_tag {};
    RationalFunction(Poly num, Poly den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        std::string v = detail::merge_var(num_.var(), den_.var());
        if (num_.is_zero()) {
            num_ = Poly(std::vector<F>{}, v);
            den_ = Poly(std::vector<F>{F(1)}, v);
            return;
        }
        if (den_.degree() > 0 && num_.degree() >= 0) {
            Poly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
        }
        F l = den_.lead();
        std::vector<F> nc, dc;
        for (const auto& c : num_.coefficients()) nc.push_back(c / l);
        for (const auto& c : den_.coefficients()) dc.push_back(c / l);
        num_ = Poly(std::move(nc), v);
        den_ = Poly(std::move(dc), v);
    }

    Poly num_;
    Poly den_;
};

template <class F>
bool is_zero(const RationalFunction<F>& f) { return f.is_zero(); }

template <class F>
std::string to_string(const RationalFunction<F>& f) { return f.str(); }

/// Q(x).
using RationalFunctionQ = RationalFunction<Rational>;

}  // namespace logmax
