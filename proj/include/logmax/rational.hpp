#pragma once

// Exact rational scalars backed by GMP.
//
// Canonical form is maintained by mpq_class: gcd(|num|, den) = 1, den >= 1,
// zero is 0/1. Text form is "p/q", or "p" when q = 1.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace logmax {

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Accepts an optional sign, digits, and an optional "/digits" part.
    static Rational parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        auto bad = [&] { return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'"); };
        if (s.empty()) throw bad();
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') ++i;
        std::size_t slash = s.find('/');
        auto digits = [&](std::size_t from, std::size_t to) {
            if (from >= to) return false;
            for (std::size_t k = from; k < to; ++k)
                if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
            return true;
        };
        std::string head = s.substr(s[0] == '+' ? 1 : 0, (slash == std::string::npos ? s.size() : slash) - (s[0] == '+' ? 1 : 0));
        if (slash == std::string::npos) {
            if (!digits(i, s.size())) throw bad();
            return Rational(mpq_class(mpz_class(head)));
        }
        if (!digits(i, slash) || !digits(slash + 1, s.size())) throw bad();
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
        return Rational(mpz_class(head), den);
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Integer power, negative exponents allowed for nonzero base.
inline Rational pow(const Rational& base, long e) {
    if (e < 0) return Rational(1) / pow(base, -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

inline Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(f));
}

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(b));
}

}  // namespace logmax
