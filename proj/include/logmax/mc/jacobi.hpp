#pragma once

// Metropolis samplers for the beta-Jacobi gas on [0,1]^n and the circular gas.

#include "logmax/mc/estimate.hpp"
#include "logmax/mc/rng.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace logmax::mc {

struct ChainConfig {
    long sweeps = 1000000;
    long burn_in = 10000;
    long thin = 1;
    long batch = 1000;  // recorded sweeps per batch mean
    std::uint64_t seed = default_seed;
};

struct ChainResult {
    std::vector<McEstimate> estimates;
    double acceptance = 0;
};

namespace detail {

inline void check_chain(const ChainConfig& c) {
    if (c.sweeps <= 0 || c.burn_in < 0 || c.thin < 1 || c.batch < 1)
        throw std::invalid_argument("invalid chain configuration");
    if (c.burn_in >= c.sweeps) throw std::invalid_argument("burn-in must be smaller than the sweep count");
}

// Single-site random-walk Metropolis. log_site(i, value) is the part of the
// log-density that depends on coordinate i; normalize maps a proposal into the
// domain or rejects it. Step widths adapt during burn-in.
template <class LogSite, class Normalize, class Record>
double run_chain(std::vector<double>& x, const ChainConfig& cfg, double width, LogSite log_site, Normalize normalize,
                 Record record) {
    Engine gen = substream(cfg.seed, 0);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
    long acc = 0, tried = 0, acc_window = 0, tried_window = 0;
    const std::size_t n = x.size();
    for (long s = 0; s < cfg.sweeps; ++s) {
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t i = pick(gen);
            double old = x[i];
            double prop = old + width * u(gen);
            ++tried;
            ++tried_window;
            if (!normalize(prop)) continue;
            double lr = log_site(i, prop) - log_site(i, old);
            if (metropolis_accept(lr, gen)) {
                x[i] = prop;
                ++acc;
                ++acc_window;
            }
        }
        if (s < cfg.burn_in) {
            if (tried_window >= 2000) {
                double r = static_cast<double>(acc_window) / static_cast<double>(tried_window);
                width *= r > 0.4 ? 1.1 : 0.9;
                acc_window = tried_window = 0;
            }
            if (s + 1 == cfg.burn_in) acc = tried = 0;
            continue;
        }
        if ((s - cfg.burn_in) % cfg.thin == 0) record(x);
    }
    return tried ? static_cast<double>(acc) / static_cast<double>(tried) : 0.0;
}

}  // namespace detail

/// Density prod y_i^a (1-y_i)^b |Delta(y)|^{2 kappa} on [0,1]^n; estimates <(1/n) sum y^k> for each k.
inline ChainResult sample_jacobi(const ChainConfig& cfg, double kappa, double a, double b, int n,
                                 const std::vector<int>& ks) {
    detail::check_chain(cfg);
    if (kappa < 0) throw std::invalid_argument("sampling needs kappa >= 0");
    if (a <= -1 || b <= -1) throw std::invalid_argument("sampling needs a > -1 and b > -1");
    if (n < 1) throw std::invalid_argument("sampling needs a positive integer n");
    auto t0 = std::chrono::steady_clock::now();
    std::vector<double> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = (i + 0.5) / n;
    auto log_site = [&](std::size_t i, double v) {
        double s = a * std::log(v) + b * std::log1p(-v);
        if (kappa != 0)
            for (std::size_t j = 0; j < y.size(); ++j)
                if (j != i) s += 2 * kappa * std::log(std::fabs(v - y[j]));
        return s;
    };
    std::vector<BatchMeans> bm(ks.size(), BatchMeans(cfg.batch));
    auto record = [&](const std::vector<double>& x) {
        for (std::size_t q = 0; q < ks.size(); ++q) {
            double s = 0;
            for (double v : x) s += std::pow(v, ks[q]);
            bm[q].add(s / static_cast<double>(x.size()));
        }
    };
    ChainResult r;
    r.acceptance = detail::run_chain(y, cfg, 0.5 / n, log_site, [](double& v) { return v > 0 && v < 1; }, record);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (std::size_t q = 0; q < ks.size(); ++q)
        r.estimates.push_back(bm[q].estimate("y^" + std::to_string(ks[q]), cfg.seed, wall));
    return r;
}

/// Density prod |1 + e^{i t_j}|^{2 mu} prod_{j<k} |e^{i t_j} - e^{i t_k}|^{2 kappa} on (-pi, pi]^n;
/// estimates <(1/n) sum cos(k t)> for each k.
inline ChainResult sample_circular(const ChainConfig& cfg, double kappa, double mu, int n, const std::vector<int>& ks) {
    detail::check_chain(cfg);
    if (kappa < 0) throw std::invalid_argument("sampling needs kappa >= 0");
    if (mu <= -0.5) throw std::invalid_argument("sampling needs mu > -1/2");
    if (n < 1) throw std::invalid_argument("sampling needs a positive integer n");
    constexpr double pi = std::numbers::pi;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<double> th(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) th[static_cast<std::size_t>(i)] = -pi + 2 * pi * (i + 0.5) / n;
    auto log_site = [&](std::size_t i, double v) {
        double s = mu * std::log(2 + 2 * std::cos(v));
        if (kappa != 0)
            for (std::size_t j = 0; j < th.size(); ++j)
                if (j != i) s += kappa * std::log(2 - 2 * std::cos(v - th[j]));
        return s;
    };
    std::vector<BatchMeans> bm(ks.size(), BatchMeans(cfg.batch));
    auto record = [&](const std::vector<double>& x) {
        for (std::size_t q = 0; q < ks.size(); ++q) {
            double s = 0;
            for (double v : x) s += std::cos(ks[q] * v);
            bm[q].add(s / static_cast<double>(x.size()));
        }
    };
    ChainResult r;
    r.acceptance = detail::run_chain(th, cfg, 1.0, log_site, [](double& v) {
        v = std::remainder(v, 2 * pi);
        return true;
    }, record);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (std::size_t q = 0; q < ks.size(); ++q)
        r.estimates.push_back(bm[q].estimate("cos(" + std::to_string(ks[q]) + " theta)", cfg.seed, wall));
    return r;
}

/// Metropolis chain on a finite state space with uniform proposals among the other states.
/// Returns the visit frequency estimate of every state.
inline std::vector<McEstimate> sample_discrete(const ChainConfig& cfg, const std::vector<double>& log_weight) {
    detail::check_chain(cfg);
    const std::size_t m = log_weight.size();
    if (m < 2) throw std::invalid_argument("need at least two states");
    Engine gen = substream(cfg.seed, 0);
    std::uniform_int_distribution<std::size_t> other(1, m - 1);
    std::vector<BatchMeans> bm(m, BatchMeans(cfg.batch));
    std::size_t s = 0;
    for (long t = 0; t < cfg.sweeps; ++t) {
        std::size_t prop = (s + other(gen)) % m;
        if (metropolis_accept(log_weight[prop] - log_weight[s], gen)) s = prop;
        if (t < cfg.burn_in || (t - cfg.burn_in) % cfg.thin) continue;
        for (std::size_t i = 0; i < m; ++i) bm[i].add(i == s ? 1.0 : 0.0);
    }
    std::vector<McEstimate> out;
    for (std::size_t i = 0; i < m; ++i) out.push_back(bm[i].estimate("state " + std::to_string(i), cfg.seed));
    return out;
}

}  // namespace logmax::mc
