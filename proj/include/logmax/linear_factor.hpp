#pragma once

// Products of affine forms in variables u_1..u_k:
//   prefactor * prod_f (c0_f + sum_i c_{f,i} u_i)^{e_f}
// and their residues in one variable at a constant pole.

#include "logmax/error.hpp"
#include "logmax/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace logmax {

struct AffineForm {
    Rational c0;
    std::vector<Rational> c;  // coefficient of u_1..u_k (0-based storage)

    AffineForm() = default;
    AffineForm(Rational constant, std::vector<Rational> coeffs) : c0(std::move(constant)), c(std::move(coeffs)) {}

    /// c0 + u_var for a problem with nvars variables.
    static AffineForm var(int nvars, int v, Rational constant = Rational(0)) {
        AffineForm f(std::move(constant), std::vector<Rational>(static_cast<std::size_t>(nvars), Rational(0)));
        f.c[static_cast<std::size_t>(v)] = Rational(1);
        return f;
    }

    /// u_j - u_i + constant.
    static AffineForm diff(int nvars, int j, int i, Rational constant) {
        AffineForm f = var(nvars, j, std::move(constant));
        f.c[static_cast<std::size_t>(i)] = Rational(-1);
        return f;
    }

    bool is_constant() const {
        return std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.is_zero(); });
    }

    /// Nonzero only in variable v.
    bool depends_only_on(int v) const {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero() && static_cast<int>(i) != v) return false;
        return !c[static_cast<std::size_t>(v)].is_zero();
    }

    int last_variable() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (!c[static_cast<std::size_t>(i)].is_zero()) return i;
        return -1;
    }

    AffineForm substitute(int v, const Rational& value) const {
        AffineForm f = *this;
        f.c0 += f.c[static_cast<std::size_t>(v)] * value;
        f.c[static_cast<std::size_t>(v)] = Rational(0);
        return f;
    }

    AffineForm scaled(const Rational& s) const {
        AffineForm f = *this;
        f.c0 *= s;
        for (auto& x : f.c) x *= s;
        return f;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            std::string v = "u" + std::to_string(i + 1);
            Rational a = c[i];
            if (!s.empty()) s += a.sign() < 0 ? " - " : " + ";
            else if (a.sign() < 0) s += "-";
            Rational m = abs(a);
            s += (m == Rational(1) ? "" : m.str() + "*") + v;
        }
        if (!c0.is_zero() || s.empty()) {
            if (s.empty()) s = c0.str();
            else s += (c0.sign() < 0 ? " - " : " + ") + abs(c0).str();
        }
        return s;
    }

    friend bool operator==(const AffineForm& a, const AffineForm& b) { return a.c0 == b.c0 && a.c == b.c; }
    friend bool operator<(const AffineForm& a, const AffineForm& b) {
        if (a.c != b.c) return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
        return a.c0 < b.c0;
    }
};

class LinearFactorTerm {
public:
    LinearFactorTerm() = default;
    explicit LinearFactorTerm(Rational pref) : pref_(std::move(pref)) {}

    const Rational& prefactor() const { return pref_; }
    const std::vector<std::pair<AffineForm, int>>& factors() const { return f_; }
    bool is_zero() const { return pref_.is_zero(); }
    bool is_constant() const { return f_.empty(); }

    void scale(const Rational& s) { pref_ *= s; }
    void set_prefactor(Rational p) { pref_ = std::move(p); }

    /// Multiply by form^e. Forms are stored with last nonzero coefficient 1 so equal factors merge.
    void times(const AffineForm& form, int e) {
        if (e == 0 || pref_.is_zero()) return;
        int lv = form.last_variable();
        if (lv < 0) {
            if (form.c0.is_zero()) {
                if (e < 0) throw Divergence("affine denominator factor vanishes identically", form.str());
                pref_ = Rational(0);
                f_.clear();
                return;
            }
            pref_ *= pow(form.c0, e);
            return;
        }
        Rational lead = form.c[static_cast<std::size_t>(lv)];
        AffineForm m = form.scaled(Rational(1) / lead);
        pref_ *= pow(lead, e);
        auto it = std::lower_bound(f_.begin(), f_.end(), m, [](const auto& p, const AffineForm& x) { return p.first < x; });
        if (it != f_.end() && it->first == m) {
            it->second += e;
            if (it->second == 0) f_.erase(it);
        } else {
            f_.insert(it, {std::move(m), e});
        }
    }

    /// Canonical key of the factor list, used to merge like terms.
    std::string key() const {
        std::string s;
        for (const auto& [f, e] : f_) s += "(" + f.str() + ")^" + std::to_string(e) + ";";
        return s;
    }

    std::string str() const { return pref_.str() + (f_.empty() ? "" : " * " + key()); }

private:
    Rational pref_{1};
    std::vector<std::pair<AffineForm, int>> f_;
};

/// Constant poles in variable v: locations where a denominator factor depending only on u_v vanishes.
inline std::vector<Rational> constant_poles(const LinearFactorTerm& t, int v) {
    std::vector<Rational> poles;
    for (const auto& [f, e] : t.factors()) {
        if (e >= 0 || !f.depends_only_on(v)) continue;
        Rational p = -f.c0 / f.c[static_cast<std::size_t>(v)];
        if (std::find(poles.begin(), poles.end(), p) == poles.end()) poles.push_back(p);
    }
    return poles;
}

namespace detail {

// d/du_v of a single product term, as a sum of product terms.
inline std::vector<LinearFactorTerm> derivative(const LinearFactorTerm& t, int v) {
    std::vector<LinearFactorTerm> out;
    for (std::size_t i = 0; i < t.factors().size(); ++i) {
        const auto& [f, e] = t.factors()[i];
        const Rational& c = f.c[static_cast<std::size_t>(v)];
        if (c.is_zero()) continue;
        LinearFactorTerm d(t.prefactor() * Rational(e) * c);
        for (std::size_t j = 0; j < t.factors().size(); ++j) {
            const auto& [g, ge] = t.factors()[j];
            d.times(g, j == i ? ge - 1 : ge);
        }
        if (!d.is_zero()) out.push_back(std::move(d));
    }
    return out;
}

}  // namespace detail

/// Residue of t in u_v at the constant pole p.
///
/// A simple pole (one denominator factor vanishing, exponent -1) is a plain
/// substitution. Higher-order poles raise PoleCollision unless allow_confluent
/// is set, in which case (1/(m-1)!) d^{m-1}/du^{m-1} [(u-p)^m t] is taken.
inline std::vector<LinearFactorTerm> residue(const LinearFactorTerm& t, int v, const Rational& p,
                                             bool allow_confluent = false) {
    LinearFactorTerm rest(t.prefactor());
    int order = 0;
    int vanishing = 0;
    for (const auto& [f, e] : t.factors()) {
        if (f.depends_only_on(v) && (f.c0 + f.c[static_cast<std::size_t>(v)] * p).is_zero()) {
            // f = c (u - p)
            rest.scale(pow(f.c[static_cast<std::size_t>(v)], e));
            order -= e;
            if (e < 0) ++vanishing;
            continue;
        }
        rest.times(f, e);
    }
    if (order <= 0) return {};
    if (order > 1 || vanishing > 1) {
        if (!allow_confluent)
            throw PoleCollision("pole of order " + std::to_string(order) + " in u" + std::to_string(v + 1) + " at " +
                                p.str() + "; choose generic parameters");
    }
    std::vector<LinearFactorTerm> cur{rest};
    for (int d = 1; d < order; ++d) {
        std::vector<LinearFactorTerm> next;
        for (const auto& x : cur)
            for (auto& y : detail::derivative(x, v)) next.push_back(std::move(y));
        cur = std::move(next);
    }
    Rational inv_fact = Rational(1) / factorial(order - 1);
    std::vector<LinearFactorTerm> out;
    for (const auto& x : cur) {
        LinearFactorTerm r(x.prefactor() * inv_fact);
        for (const auto& [f, e] : x.factors()) r.times(f.substitute(v, p), e);
        if (!r.is_zero()) out.push_back(std::move(r));
    }
    return out;
}

/// Simple-pole residue; fails on higher-order poles.
inline LinearFactorTerm residue_simple(const LinearFactorTerm& t, int v, const Rational& p) {
    auto r = residue(t, v, p, false);
    if (r.empty()) return LinearFactorTerm(Rational(0));
    return r.front();
}

}  // namespace logmax
