#pragma once

// Products of polynomial factors in one indeterminate, with integer exponents:
//   prefactor * prod_f p_f(x)^{e_f}
// A moment formula is a sum of such terms (one per partition). Limits of the
// sum are taken term by term through truncated Laurent expansions.

#include "logmax/error.hpp"
#include "logmax/polynomial.hpp"
#include "logmax/rational_function.hpp"
#include "logmax/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace logmax {

/// (x)_m = x(x+1)...(x+m-1); (x)_m = 1/((x+m)_{-m}) for m < 0.
template <class F>
F pochhammer(const F& x, long m) {
    F r(1);
    if (m >= 0) {
        for (long j = 0; j < m; ++j) r = r * (x + F(j));
        return r;
    }
    for (long j = 1; j <= -m; ++j) {
        F d = x - F(j);
        if (is_zero(d)) throw Divergence("Pochhammer symbol with negative index hits zero", to_string(x) + " - " + std::to_string(j));
        r = r * d;
    }
    return F(1) / r;
}

template <class F>
struct FactoredTerm {
    using Poly = Polynomial<F>;

    F prefactor = F(1);
    std::vector<std::pair<Poly, int>> factors;
    std::string label;

    FactoredTerm() = default;
    explicit FactoredTerm(std::string l) : label(std::move(l)) {}

    bool is_zero() const { return detail::zero_of(prefactor); }

    FactoredTerm& times(const F& c) {
        prefactor = prefactor * c;
        return *this;
    }

    /// Multiply by p^e. Constant factors fold into the prefactor.
    FactoredTerm& times(const Poly& p, int e = 1) {
        if (e == 0) return *this;
        if (p.is_constant()) {
            F c = p.constant_term();
            if (detail::zero_of(c)) {
                if (e < 0) throw Divergence("vanishing denominator factor", "0", label);
                prefactor = F(0);
                return *this;
            }
            for (int i = 0; i < (e < 0 ? -e : e); ++i) prefactor = e < 0 ? prefactor / c : prefactor * c;
            return *this;
        }
        // keep a monic representative so that equal factors merge
        F l = p.lead();
        Poly m = p.monic();
        for (int i = 0; i < (e < 0 ? -e : e); ++i) prefactor = e < 0 ? prefactor / l : prefactor * l;
        for (auto& [q, k] : factors)
            if (q == m) {
                k += e;
                return *this;
            }
        factors.emplace_back(std::move(m), e);
        return *this;
    }

    /// Multiply by ((x)_m)^e.
    FactoredTerm& times_pochhammer(const Poly& x, long m, int e = 1) {
        if (m >= 0) {
            for (long j = 0; j < m; ++j) times(x + Poly(F(j)), e);
        } else {
            for (long j = 1; j <= -m; ++j) times(x - Poly(F(j)), -e);
        }
        return *this;
    }

    std::string str() const {
        std::string s = to_string(prefactor);
        for (const auto& [p, e] : factors) {
            s += " * (" + p.str() + ")";
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

/// Laurent coefficients (orders 0..order) at x = x0 of a sum of terms. All
/// negative orders must cancel in the sum; otherwise the sum genuinely
/// diverges and Divergence names the offending terms.
template <class F>
std::vector<F> laurent_coefficients(const std::vector<FactoredTerm<F>>& terms, const F& x0, int order) {
    std::map<int, F> acc;
    std::vector<std::string> singular;
    // expansions of distinct factors are reused across terms
    std::vector<std::pair<const Polynomial<F>*, std::pair<int, std::vector<F>>>> cache;
    auto expand = [&](const Polynomial<F>& p) -> const std::pair<int, std::vector<F>>& {
        for (const auto& [q, ex] : cache)
            if (*q == p) return ex;
        Polynomial<F> s = p.taylor_shift(x0);
        int v = s.valuation();
        std::vector<F> c(s.coefficients().begin() + v, s.coefficients().end());
        cache.push_back({&p, {v, std::move(c)}});
        return cache.back().second;
    };
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        int val = 0;
        for (const auto& [p, e] : t.factors) val += e * expand(p).first;
        if (val > order) continue;
        if (val < 0) singular.push_back(t.label.empty() ? t.str() : t.label);
        const std::size_t len = static_cast<std::size_t>(order - val + 1);
        std::vector<F> s(len, F(0));
        s[0] = t.prefactor;
        for (const auto& [p, e] : t.factors) {
            const auto& ex = expand(p);
            if (ex.second.size() == 1) {
                F c = ex.second[0];
                F m(1);
                for (int i = 0; i < (e < 0 ? -e : e); ++i) m = m * c;
                if (e < 0) m = F(1) / m;
                for (auto& v : s) v = v * m;
            } else {
                s = series::mul(s, series::power(ex.second, e, len), len);
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            int o = val + static_cast<int>(i);
            auto it = acc.find(o);
            if (it == acc.end()) acc.emplace(o, s[i]);
            else it->second = it->second + s[i];
        }
    }
    for (const auto& [o, c] : acc) {
        if (o >= 0) break;
        if (!detail::zero_of(c)) {
            std::string who;
            for (std::size_t i = 0; i < singular.size() && i < 8; ++i) who += (i ? ", " : "") + singular[i];
            if (singular.size() > 8) who += ", ...";
            throw Divergence("pole of order " + std::to_string(-o) + " at " + to_string(x0) + " does not cancel",
                             "", who);
        }
    }
    std::vector<F> out(static_cast<std::size_t>(order + 1), F(0));
    for (const auto& [o, c] : acc)
        if (o >= 0 && o <= order) out[static_cast<std::size_t>(o)] = c;
    return out;
}

/// Value of the sum at x0 as a limit.
template <class F>
F limit_at(const std::vector<FactoredTerm<F>>& terms, const F& x0) {
    return laurent_coefficients(terms, x0, 0)[0];
}

/// Value of a single term as a limit at x0.
template <class F>
F limit_at(const FactoredTerm<F>& term, const F& x0) {
    return laurent_coefficients(std::vector<FactoredTerm<F>>{term}, x0, 0)[0];
}

/// The same sum written in e = 1/x, so its expansion at e = 0 is the behaviour at infinity.
template <class F>
std::vector<FactoredTerm<F>> at_infinity(const std::vector<FactoredTerm<F>>& terms) {
    std::vector<FactoredTerm<F>> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        FactoredTerm<F> r(t.label);
        r.prefactor = t.prefactor;
        int shift = 0;
        std::string var;
        for (const auto& [p, e] : t.factors) {
            r.times(p.reversed(), e);
            shift -= e * p.degree();
            var = p.var();
        }
        if (shift != 0) r.times(Polynomial<F>::variable(var), shift);
        out.push_back(std::move(r));
    }
    return out;
}

/// Limit of the sum as x -> infinity.
template <class F>
F limit_at_infinity(const std::vector<FactoredTerm<F>>& terms) {
    return limit_at(at_infinity(terms), F(0));
}

/// Exact symbolic sum.
template <class F>
RationalFunction<F> to_rational_function(const std::vector<FactoredTerm<F>>& terms, const std::string& var) {
    RationalFunction<F> sum(0L);
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        Polynomial<F> num(std::vector<F>{t.prefactor}, var), den(std::vector<F>{F(1)}, var);
        for (const auto& [p, e] : t.factors) {
            if (e > 0) num = num * pow(p, static_cast<unsigned>(e));
            else den = den * pow(p, static_cast<unsigned>(-e));
        }
        sum = sum + RationalFunction<F>(num, den);
    }
    return sum;
}

}  // namespace logmax
