#pragma once

// Symmetric tridiagonal matrices: Sturm counts, bisection eigenvalues and
// log|det(x - T)| from the LDL^T pivot recurrence.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace logmax::mc {

struct Tridiagonal {
    std::vector<double> d;  // diagonal, size N
    std::vector<double> e;  // off-diagonal, size N-1

    std::size_t size() const { return d.size(); }
};

/// Number of eigenvalues strictly below x.
inline std::size_t sturm_count(const Tridiagonal& t, double x) {
    const double tiny = std::numeric_limits<double>::min();
    std::size_t c = 0;
    double q = t.d[0] - x;
    if (q < 0) ++c;
    for (std::size_t i = 1; i < t.d.size(); ++i) {
        if (q == 0) q = tiny;
        q = t.d[i] - x - t.e[i - 1] * t.e[i - 1] / q;
        if (q < 0) ++c;
    }
    return c;
}

/// Gershgorin bounds of the spectrum.
inline std::pair<double, double> gershgorin(const Tridiagonal& t) {
    double lo = INFINITY, hi = -INFINITY;
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        double r = (i ? std::fabs(t.e[i - 1]) : 0.0) + (i + 1 < n ? std::fabs(t.e[i]) : 0.0);
        lo = std::min(lo, t.d[i] - r);
        hi = std::max(hi, t.d[i] + r);
    }
    return {lo, hi};
}

/// All eigenvalues in increasing order by bisection on Sturm counts.
inline std::vector<double> eigenvalues_bisection(const Tridiagonal& t, double tol = 1e-12) {
    const std::size_t n = t.size();
    if (n == 0) return {};
    if (t.e.size() + 1 != n) throw std::invalid_argument("tridiagonal: off-diagonal must have size N-1");
    auto [lo, hi] = gershgorin(t);
    const double scale = std::max(std::fabs(lo), std::fabs(hi));
    lo -= 1e-9 * scale + tol;
    hi += 1e-9 * scale + tol;
    std::vector<double> ev(n);
    // bounds for every eigenvalue, tightened by each count
    std::vector<double> lower(n, lo), upper(n, hi);
    for (std::size_t k = 0; k < n; ++k) {
        double a = std::max(lower[k], k ? ev[k - 1] : lo), b = upper[k];
        while (b - a > tol * std::max(1.0, std::fabs(a) + std::fabs(b))) {
            double m = 0.5 * (a + b);
            std::size_t c = sturm_count(t, m);
            if (c > k) {
                b = m;
                for (std::size_t j = k + 1; j < c; ++j) upper[j] = std::min(upper[j], m);
            } else {
                a = m;
                for (std::size_t j = c; j < n; ++j) lower[j] = std::max(lower[j], m);
            }
        }
        ev[k] = 0.5 * (a + b);
    }
    return ev;
}

/// log|det(x - T)|; exact zeros of a pivot are nudged to the smallest normal number.
inline double log_abs_det_shifted(const Tridiagonal& t, double x) {
    const double tiny = std::numeric_limits<double>::min();
    double q = x - t.d[0];
    double prod = 1;
    long exp2 = 0;
    for (std::size_t i = 0;;) {
        if (q == 0) q = tiny;
        prod *= q;
        if ((i & 15) == 15) {
            int ex;
            prod = std::frexp(prod, &ex);
            exp2 += ex;
        }
        if (++i == t.d.size()) break;
        q = x - t.d[i] - t.e[i - 1] * t.e[i - 1] / q;
    }
    int ex;
    prod = std::frexp(prod, &ex);
    exp2 += ex;
    return std::log(std::fabs(prod)) + static_cast<double>(exp2) * std::numbers::ln2;
}

}  // namespace logmax::mc
