#pragma once

// GUE characteristic polynomial: position of the maximum of
//   phi_N(x) = 2 log|det(x - H)| - N (2 x^2 - 1 - 2 log 2)
// on [-1, 1], with H from the beta = 2 tridiagonal Hermite model scaled so the
// spectrum fills [-1, 1].

#include "logmax/mc/estimate.hpp"
#include "logmax/mc/rng.hpp"
#include "logmax/mc/tridiag.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace logmax::mc {

/// Tridiagonal beta-Hermite matrix with diagonal N(0,1) and off-diagonal chi_{beta(N-i)}/sqrt(2),
/// multiplied by 1/(2 sqrt N) so that the semicircle is supported on [-1, 1].
inline Tridiagonal hermite_tridiagonal(int N, double beta, Engine& gen) {
    std::normal_distribution<double> g(0.0, 1.0);
    Tridiagonal t;
    const double s = 1.0 / (2.0 * std::sqrt(static_cast<double>(N)));
    t.d.resize(static_cast<std::size_t>(N));
    t.e.resize(static_cast<std::size_t>(N - 1));
    for (int i = 0; i < N; ++i) t.d[static_cast<std::size_t>(i)] = g(gen) * s;
    for (int i = 1; i < N; ++i) {
        std::chi_squared_distribution<double> chi2(beta * (N - i));
        t.e[static_cast<std::size_t>(i - 1)] = std::sqrt(chi2(gen) / 2.0) * s;
    }
    return t;
}

inline double gue_phi(const Tridiagonal& t, double x) {
    const double N = static_cast<double>(t.size());
    return 2 * log_abs_det_shifted(t, x) - N * (2 * x * x - 1 - 2 * std::numbers::ln2);
}

/// Chebyshev nodes on [-1, 1] in increasing order.
inline std::vector<double> chebyshev_grid(int m) {
    std::vector<double> x(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) x[static_cast<std::size_t>(j)] = -std::cos(std::numbers::pi * (j + 0.5) / m);
    return x;
}

/// Maximizer of f on the grid, refined by golden-section search between the neighbouring nodes.
template <class Fn>
double grid_argmax(const std::vector<double>& grid, Fn f, double lo, double hi, int golden_iters = 48) {
    std::size_t best = 0;
    double fb = -INFINITY;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        double v = f(grid[j]);
        if (v > fb) {
            fb = v;
            best = j;
        }
    }
    double a = best ? grid[best - 1] : lo;
    double b = best + 1 < grid.size() ? grid[best + 1] : hi;
    const double r = (std::sqrt(5.0) - 1) / 2;
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < golden_iters; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    double xm = 0.5 * (a + b);
    return f(xm) >= fb ? xm : grid[best];
}

struct GueConfig {
    int N = 1000;
    long realizations = 2000;
    int grid = 8192;
    int spectrum_every = 10;  // bisection spectrum on every k-th realization
    int jobs = 1;
    std::uint64_t seed = default_seed;
};

struct GueResult {
    int N = 0;
    double finite_size_axis = 0;  // 1 / (10 (ln N)^3)
    McEstimate x_mean, x2, x4, inv_one_minus_x, spectrum_m2;
    double kurtosis = 0;
    long discarded = 0;
};

/// Position of the maximum and spectrum second moment of realization i.
struct GueRealization {
    double xm = 0;
    double spectrum_m2 = NAN;
    bool ok = true;
};

inline GueRealization gue_realization(const GueConfig& cfg, const std::vector<double>& grid, long i) {
    Engine gen = substream(cfg.seed, static_cast<std::uint64_t>(i));
    Tridiagonal t = hermite_tridiagonal(cfg.N, 2.0, gen);
    GueRealization r;
    r.xm = grid_argmax(grid, [&](double x) { return gue_phi(t, x); }, -1.0, 1.0);
    if (!std::isfinite(r.xm)) r.ok = false;
    if (cfg.spectrum_every > 0 && i % cfg.spectrum_every == 0) {
        auto ev = eigenvalues_bisection(t, 1e-10);
        double s = 0;
        for (double v : ev) s += v * v;
        r.spectrum_m2 = s / cfg.N;
        if (!std::isfinite(s)) r.ok = false;
    }
    return r;
}

inline GueResult sample_gue_argmax(const GueConfig& cfg) {
    if (cfg.N < 50) throw std::invalid_argument("GUE sampler needs N >= 50");
    if (cfg.grid < 256) throw std::invalid_argument("grid resolution must be >= 256");
    if (cfg.realizations < 2) throw std::invalid_argument("need at least 2 realizations");
    auto t0 = std::chrono::steady_clock::now();
    const auto grid = chebyshev_grid(cfg.grid);
    std::vector<GueRealization> out(static_cast<std::size_t>(cfg.realizations));
    const int jobs = std::max(1, cfg.jobs);
    auto work = [&](int w) {
        for (long i = w; i < cfg.realizations; i += jobs) out[static_cast<std::size_t>(i)] = gue_realization(cfg, grid, i);
    };
    if (jobs == 1) work(0);
    else {
        std::vector<std::thread> th;
        for (int w = 0; w < jobs; ++w) th.emplace_back(work, w);
        for (auto& t : th) t.join();
    }
    Accumulator x1, x2, x4, inv, sp;
    GueResult r;
    for (const auto& o : out) {
        if (!o.ok) {
            ++r.discarded;
            continue;
        }
        x1.add(o.xm);
        x2.add(o.xm * o.xm);
        x4.add(o.xm * o.xm * o.xm * o.xm);
        inv.add(1.0 / (1.0 - o.xm));
        if (!std::isnan(o.spectrum_m2)) sp.add(o.spectrum_m2);
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.N = cfg.N;
    double ln = std::log(static_cast<double>(cfg.N));
    r.finite_size_axis = 1.0 / (10 * ln * ln * ln);
    r.x_mean = x1.estimate("x_m", cfg.seed, wall);
    r.x2 = x2.estimate("x_m^2", cfg.seed, wall);
    r.x4 = x4.estimate("x_m^4", cfg.seed, wall);
    r.inv_one_minus_x = inv.estimate("(1-x_m)^-1", cfg.seed, wall);
    r.spectrum_m2 = sp.estimate("spectrum <lambda^2>", cfg.seed, wall);
    double m1 = r.x_mean.mean, m2 = r.x2.mean, m4 = r.x4.mean;
    double m3 = 0;
    for (const auto& o : out)
        if (o.ok) m3 += o.xm * o.xm * o.xm;
    m3 /= static_cast<double>(x1.count);
    double c2 = m2 - m1 * m1;
    double c4 = m4 - 4 * m3 * m1 - 3 * m2 * m2 + 12 * m2 * m1 * m1 - 6 * m1 * m1 * m1 * m1;
    r.kurtosis = c4 / (c2 * c2);
    return r;
}

}  // namespace logmax::mc
