#pragma once

// Nested-residue evaluation of the contour-integral moment formulas.
// u_1 is integrated first, then u_2, and so on. At every step all constant
// poles are enclosed except the designated excluded one.

#include "logmax/error.hpp"
#include "logmax/jacobi.hpp"
#include "logmax/linear_factor.hpp"

#include <map>
#include <string>
#include <vector>

namespace logmax {

enum class ContourKind {
    positive_finite_n,
    negative_finite_n,
    positive_n0,
    negative_n0,
    positive_frozen,
    negative_frozen,
};

inline std::string to_string(ContourKind k) {
    switch (k) {
        case ContourKind::positive_finite_n: return "positive-finite-n";
        case ContourKind::negative_finite_n: return "negative-finite-n";
        case ContourKind::positive_n0: return "positive-n0";
        case ContourKind::negative_n0: return "negative-n0";
        case ContourKind::positive_frozen: return "positive-frozen";
        case ContourKind::negative_frozen: return "negative-frozen";
    }
    return "?";
}

inline ContourKind parse_contour_kind(const std::string& s) {
    for (auto k : {ContourKind::positive_finite_n, ContourKind::negative_finite_n, ContourKind::positive_n0,
                   ContourKind::negative_n0, ContourKind::positive_frozen, ContourKind::negative_frozen})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown contour kind '" + s + "'");
}

struct ContourSpec {
    ContourKind kind = ContourKind::positive_finite_n;
    Rational beta2{1};
    Rational a{0};
    Rational b{0};
    Rational n{1};
    int k = 1;  // number of integration variables, the moment order is +-k

    bool frozen() const { return kind == ContourKind::positive_frozen || kind == ContourKind::negative_frozen; }
    bool negative() const {
        return kind == ContourKind::negative_finite_n || kind == ContourKind::negative_n0 ||
               kind == ContourKind::negative_frozen;
    }

    Rational excluded_pole() const {
        const Rational& t = beta2;
        switch (kind) {
            case ContourKind::positive_finite_n: return Rational(2) + a + b + t * (Rational(1) - n);
            case ContourKind::positive_n0: return Rational(2) + a + b + Rational(2) * t;
            case ContourKind::positive_frozen: return Rational(4) + a + b;
            default: return a;
        }
    }
};

struct PoleEvent {
    int variable;  // 1-based
    Rational pole;
    std::size_t terms_in;
    std::size_t terms_out;
};

struct ContourResult {
    Rational value;
    std::vector<PoleEvent> tree;
    std::size_t max_terms = 0;
};

/// Integrand as a single product of affine factors.
inline LinearFactorTerm build_integrand(const ContourSpec& s) {
    const int k = s.k;
    if (k < 1) throw std::invalid_argument("contour order must be >= 1");
    Rational t = s.frozen() ? Rational(1) : s.beta2;
    const Rational one(1);
    if (t.is_zero()) throw std::domain_error("contour formula needs beta^2 != 0");
    const bool neg = s.negative();
    const bool finite_n = s.kind == ContourKind::positive_finite_n || s.kind == ContourKind::negative_finite_n;
    if (finite_n && s.n.is_zero()) throw std::domain_error("finite-n contour formula needs n != 0");

    LinearFactorTerm term(Rational(1));
    if (finite_n) term.scale((neg ? Rational(-1) : one) / (s.n * t));
    const Rational sg = neg ? Rational(-1) : one;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < j; ++i) {
            term.times(AffineForm::diff(k, j, i, Rational(0)), 1);
            term.times(AffineForm::diff(k, j, i, sg * t), -1);
            term.times(AffineForm::diff(k, j, i, sg), -1);
            if (i + 1 < j) term.times(AffineForm::diff(k, j, i, sg * (one + t)), 1);
        }
    const Rational& a = s.a;
    const Rational& b = s.b;
    for (int i = 0; i < k; ++i) {
        switch (s.kind) {
            case ContourKind::positive_finite_n:
                term.times(AffineForm::var(k, i, t), 1);
                term.times(AffineForm::var(k, i, t * (one - s.n)), -1);
                term.times(AffineForm::var(k, i, -one - a), 1);
                term.times(AffineForm::var(k, i, -Rational(2) - a - b - t * (one - s.n)), -1);
                break;
            case ContourKind::negative_finite_n:
                term.times(AffineForm::var(k, i, -s.n * t), 1);
                term.times(AffineForm::var(k, i), -1);
                term.times(AffineForm::var(k, i, -one - a - b - t * (one - s.n)), 1);
                term.times(AffineForm::var(k, i, -a), -1);
                break;
            case ContourKind::positive_n0:
            case ContourKind::positive_frozen:
                term.times(AffineForm::var(k, i, -one - a - t), 1);
                term.times(AffineForm::var(k, i, -Rational(2) - a - b - Rational(2) * t), -1);
                break;
            case ContourKind::negative_n0:
            case ContourKind::negative_frozen:
                term.times(AffineForm::var(k, i, -one - a - b - t), 1);
                term.times(AffineForm::var(k, i, -a), -1);
                break;
        }
    }
    if (!finite_n) term.times(AffineForm::var(k, 0), -1);
    return term;
}

/// Integrates u_1..u_k in turn by residues.
///
/// Poles of order > 1 occur structurally in the frozen kinds and are handled
/// by confluent residues. With strict set, a non-frozen higher-order pole
/// raises PoleCollision instead.
inline ContourResult evaluate_nested(const ContourSpec& s, std::size_t term_budget = 1000000, bool record_tree = false,
                                     bool strict = false) {
    const Rational excluded = s.excluded_pole();
    const bool confluent = s.frozen() || !strict;
    std::vector<LinearFactorTerm> terms{build_integrand(s)};
    ContourResult res;
    for (int v = 0; v < s.k; ++v) {
        std::map<std::string, LinearFactorTerm> merged;
        std::map<Rational, std::pair<std::size_t, std::size_t>> stats;
        for (const auto& t : terms) {
            for (const auto& p : constant_poles(t, v)) {
                if (p == excluded) continue;
                auto r = residue(t, v, p, confluent);
                if (record_tree) {
                    auto& st = stats[p];
                    st.first += 1;
                    st.second += r.size();
                }
                for (auto& x : r) {
                    auto key = x.key();
                    auto it = merged.find(key);
                    if (it == merged.end()) merged.emplace(std::move(key), std::move(x));
                    else it->second.set_prefactor(it->second.prefactor() + x.prefactor());
                }
                if (merged.size() > term_budget)
                    throw std::runtime_error("contour evaluation exceeded the term budget of " + std::to_string(term_budget));
            }
        }
        terms.clear();
        for (auto& [key, t] : merged)
            if (!t.is_zero()) terms.push_back(std::move(t));
        res.max_terms = std::max(res.max_terms, terms.size());
        if (record_tree)
            for (const auto& [p, st] : stats) res.tree.push_back({v + 1, p, st.first, st.second});
    }
    Rational sum(0);
    for (const auto& t : terms) {
        if (!t.is_constant()) throw InvariantViolation("integration variables remain after the last residue: " + t.str());
        sum += t.prefactor();
    }
    res.value = sum;
    return res;
}

struct CrosscheckReport {
    bool skipped = false;
    std::string reason;
    Rational contour_value;
    Rational partition_value;
    bool equal = false;
};

/// Compares the contour engine with the partition sum at kappa = -beta^2.
/// q.n == 0 selects the n=0 contour formulas; q.kappa = -1 and n = 0 the frozen ones when frozen is set.
inline CrosscheckReport crosscheck(const MomentQuery& q, bool frozen = false) {
    CrosscheckReport r;
    Rational beta2 = -q.kappa;
    if (beta2.is_zero()) {
        r.skipped = true;
        r.reason = "contour formula undefined at kappa = 0 (1/(n beta^2) prefactor)";
        return r;
    }
    ContourSpec s;
    s.beta2 = beta2;
    s.a = q.a;
    s.b = q.b;
    s.n = q.n;
    s.k = q.k < 0 ? -q.k : q.k;
    bool neg = q.k < 0;
    if (q.n.is_zero()) {
        if (frozen && beta2 == Rational(1)) s.kind = neg ? ContourKind::negative_frozen : ContourKind::positive_frozen;
        else s.kind = neg ? ContourKind::negative_n0 : ContourKind::positive_n0;
    } else {
        s.kind = neg ? ContourKind::negative_finite_n : ContourKind::positive_finite_n;
    }
    r.contour_value = evaluate_nested(s).value;
    r.partition_value = moment_partition_sum(q);
    r.equal = r.contour_value == r.partition_value;
    return r;
}

}  // namespace logmax
