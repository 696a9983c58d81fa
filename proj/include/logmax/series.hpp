#pragma once

// Truncated power series over a field F, stored as coefficient vectors.

#include "logmax/error.hpp"

#include <algorithm>
#include <vector>

namespace logmax::series {

template <class F>
std::vector<F> mul(const std::vector<F>& a, const std::vector<F>& b, std::size_t len) {
    std::vector<F> c(len, F(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] = c[i + j] + a[i] * b[j];
    }
    return c;
}

/// 1/a; requires a[0] != 0.
template <class F>
std::vector<F> inverse(const std::vector<F>& a, std::size_t len) {
    if (a.empty() || is_zero(a[0])) throw InvariantViolation("series inverse of a non-unit");
    std::vector<F> r(len, F(0));
    if (len == 0) return r;
    const F inv0 = F(1) / a[0];
    r[0] = inv0;
    for (std::size_t n = 1; n < len; ++n) {
        F acc(0);
        for (std::size_t k = 1; k <= n && k < a.size(); ++k) acc = acc + a[k] * r[n - k];
        r[n] = -acc * inv0;
    }
    return r;
}

/// a^e for any integer e; negative e requires a unit.
template <class F>
std::vector<F> power(const std::vector<F>& a, long e, std::size_t len) {
    std::vector<F> base = e < 0 ? inverse(a, len) : std::vector<F>(a.begin(), a.begin() + static_cast<long>(std::min(a.size(), len)));
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    std::vector<F> r(len, F(0));
    if (len) r[0] = F(1);
    while (k) {
        if (k & 1ul) r = mul(r, base, len);
        k >>= 1ul;
        if (k) base = mul(base, base, len);
    }
    return r;
}

}  // namespace logmax::series
