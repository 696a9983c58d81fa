#pragma once

// Dense univariate polynomials over an exact field F.
//
// F must provide F(long), + - * /, unary -, ==, and free functions
// is_zero(const F&) and to_string(const F&). Rational and
// RationalFunction<...> both qualify, so polynomials nest.

#include "logmax/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace logmax {

namespace detail {

// Coefficients that print as compound expressions need parentheses in a product.
inline bool needs_parens(const std::string& s) {
    bool symbolic = false;
    for (char c : s)
        if (std::isalpha(static_cast<unsigned char>(c))) symbolic = true;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == '+' || s[i] == '-') return true;
        if (symbolic && (s[i] == '*' || s[i] == '/')) return true;
    }
    return false;
}

template <class T>
bool zero_of(const T& x) { return is_zero(x); }

inline std::string merge_var(const std::string& a, const std::string& b) {
    return a.empty() ? b : a;
}

}  // namespace detail

template <class F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const F& c) { // NOLINT(google-explicit-constructor)
        if (!detail::zero_of(c)) c_.push_back(c);
    }
    Polynomial(long c) : Polynomial(F(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(std::vector<F> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
        trim();
    }

    /// The indeterminate itself.
    static Polynomial variable(std::string var) { return Polynomial({F(0), F(1)}, std::move(var)); }

    /// c0 + c1*x, a common building block.
    static Polynomial linear(const F& c0, const F& c1, std::string var) {
        return Polynomial({c0, c1}, std::move(var));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::string& var() const { return var_; }
    void set_var(std::string v) { var_ = std::move(v); }
    const std::vector<F>& coefficients() const { return c_; }

    F coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
        return c_[static_cast<std::size_t>(i)];
    }
    F lead() const { return c_.empty() ? F(0) : c_.back(); }
    F constant_term() const { return coeff(0); }

    F operator()(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        std::vector<F> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<long>(i)));
        return Polynomial(std::move(d), var_);
    }

    /// Coefficients of p(x0 + e) as a polynomial in e.
    Polynomial taylor_shift(const F& x0) const {
        std::vector<F> c = c_;
        const std::size_t n = c.size();
        // repeated synthetic division
        for (std::size_t k = 0; k + 1 < n; ++k)
            for (std::size_t j = n - 1; j > k; --j) c[j - 1] = c[j - 1] + x0 * c[j];
        return Polynomial(std::move(c), var_);
    }

    /// x^deg * p(1/x).
    Polynomial reversed() const {
        std::vector<F> c(c_.rbegin(), c_.rend());
        return Polynomial(std::move(c), var_);
    }

    /// Smallest power of x with nonzero coefficient; -1 for the zero polynomial.
    int valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!detail::zero_of(c_[i])) return static_cast<int>(i);
        return -1;
    }

    Polynomial monic() const {
        if (c_.empty()) return *this;
        F l = lead();
        std::vector<F> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(v / l);
        return Polynomial(std::move(c), var_);
    }

    Polynomial operator-() const {
        std::vector<F> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(-v);
        return Polynomial(std::move(c), var_);
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return Polynomial(std::move(c), detail::merge_var(a.var_, b.var_));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return Polynomial(std::vector<F>{}, detail::merge_var(a.var_, b.var_));
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(c), detail::merge_var(a.var_, b.var_));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Euclidean division: returns {quotient, remainder}.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
        std::string v = detail::merge_var(a.var_, b.var_);
        if (a.degree() < b.degree()) return {Polynomial(std::vector<F>{}, v), a};
        std::vector<F> r = a.c_;
        std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), F(0));
        const F lb = b.lead();
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            F t = r[static_cast<std::size_t>(k + b.degree())] / lb;
            q[static_cast<std::size_t>(k)] = t;
            if (detail::zero_of(t)) continue;
            for (int j = 0; j <= b.degree(); ++j)
                r[static_cast<std::size_t>(k + j)] = r[static_cast<std::size_t>(k + j)] - t * b.c_[static_cast<std::size_t>(j)];
        }
        r.resize(static_cast<std::size_t>(b.degree()));
        return {Polynomial(std::move(q), v), Polynomial(std::move(r), v)};
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& x) { return os << x.str(); }

    std::string str() const {
        if (c_.empty()) return "0";
        const std::string x = var_.empty() ? "x" : var_;
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const F& ci = c_[static_cast<std::size_t>(i)];
            if (detail::zero_of(ci)) continue;
            std::string s = to_string(ci);
            bool neg = false;
            if (!detail::needs_parens(s) && s[0] == '-') {
                neg = true;
                s = s.substr(1);
            }
            if (detail::needs_parens(s)) s = "(" + s + ")";
            if (!out.empty()) out += neg ? " - " : " + ";
            else if (neg) out += "-";
            std::string mono = i == 0 ? "" : (i == 1 ? x : x + "^" + std::to_string(i));
            if (mono.empty()) out += s;
            else if (s == "1") out += mono;
            else out += s + "*" + mono;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && detail::zero_of(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
    std::string var_;
};

template <class F>
bool is_zero(const Polynomial<F>& p) { return p.is_zero(); }

template <class F>
std::string to_string(const Polynomial<F>& p) { return p.str(); }

/// Monic gcd by Euclid; remainders are made monic to contain coefficient growth.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree() == 0) return Polynomial<F>(std::vector<F>{F(1)}, a.var());
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a;
}

template <class F>
Polynomial<F> pow(const Polynomial<F>& p, unsigned e) {
    Polynomial<F> r(std::vector<F>{F(1)}, p.var());
    Polynomial<F> b = p;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

/// Substitute an arbitrary polynomial for the indeterminate: p(q(x)).
template <class F>
Polynomial<F> compose(const Polynomial<F>& p, const Polynomial<F>& q) {
    Polynomial<F> acc(std::vector<F>{}, q.var());
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial<F>(std::vector<F>{*it}, q.var());
    return acc;
}

}  // namespace logmax
