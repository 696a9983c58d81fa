#pragma once

// fBm0 on a grid of [0, L]: covariance
//   phi(x1) + phi(x2) - phi(x1 - x2),   phi(x) = (1/4) log((x^2 + 4 eta^2) / (4 eta^2)),
// Cholesky factor, V = 2B, y_m = argmin / L with V(0) = 0 included.

#include "logmax/mc/estimate.hpp"
#include "logmax/mc/rng.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace logmax::mc {

struct Fbm0Config {
    int grid = 4096;  // points x_i = i L / grid, i = 1..grid
    double L = 1.0;
    double eta = 1.0 / 1024;
    long realizations = 5000;
    int block = 64;  // realizations drawn per matrix product
    std::uint64_t seed = default_seed;
};

struct Fbm0Result {
    McEstimate centered, y2, y4;
    double jitter = 0;
};

inline double fbm0_phi(double x, double eta) { return 0.25 * std::log1p(x * x / (4 * eta * eta)); }

/// Lower Cholesky factor of the grid covariance of B, adding diagonal jitter if needed.
inline Eigen::MatrixXd fbm0_cholesky(const Fbm0Config& cfg, double* jitter_used = nullptr) {
    const int m = cfg.grid;
    Eigen::MatrixXd C(m, m);
    std::vector<double> ph(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) ph[static_cast<std::size_t>(i)] = fbm0_phi(cfg.L * i / m, cfg.eta);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= i; ++j) {
            double c = ph[static_cast<std::size_t>(i + 1)] + ph[static_cast<std::size_t>(j + 1)] -
                       ph[static_cast<std::size_t>(i - j)];
            C(i, j) = c;
            C(j, i) = c;
        }
    double jitter = 0;
    for (int attempt = 0; attempt < 12; ++attempt) {
        Eigen::LLT<Eigen::MatrixXd> llt;
        if (jitter > 0) {
            Eigen::MatrixXd Cj = C;
            Cj.diagonal().array() += jitter;
            llt.compute(Cj);
        } else {
            llt.compute(C);
        }
        if (llt.info() == Eigen::Success) {
            if (jitter_used) *jitter_used = jitter;
            return llt.matrixL();
        }
        jitter = jitter == 0 ? 1e-12 * C.diagonal().maxCoeff() : jitter * 10;
    }
    throw std::runtime_error("fbm0 covariance: Cholesky failed even with diagonal jitter " + std::to_string(jitter));
}

inline Fbm0Result sample_fbm0_argmin(const Fbm0Config& cfg) {
    if (!(cfg.eta > 0) || !(cfg.L > 0)) throw std::invalid_argument("fbm0 sampler needs eta > 0 and L > 0");
    if (cfg.grid < 256) throw std::invalid_argument("grid resolution must be >= 256");
    if (cfg.L / cfg.grid > 4 * cfg.eta) throw std::invalid_argument("grid spacing too coarse for eta");
    auto t0 = std::chrono::steady_clock::now();
    Fbm0Result r;
    const Eigen::MatrixXd Lf = fbm0_cholesky(cfg, &r.jitter);
    const int m = cfg.grid;
    Accumulator c1, y2, y4;
    std::normal_distribution<double> g(0.0, 1.0);
    for (long start = 0; start < cfg.realizations; start += cfg.block) {
        const long cnt = std::min<long>(cfg.block, cfg.realizations - start);
        Eigen::MatrixXd Z(m, cnt);
        for (long c = 0; c < cnt; ++c) {
            Engine gen = substream(cfg.seed, static_cast<std::uint64_t>(start + c));
            g.reset();
            for (int i = 0; i < m; ++i) Z(i, c) = g(gen);
        }
        Eigen::MatrixXd B = Lf.triangularView<Eigen::Lower>() * Z;
        for (long c = 0; c < cnt; ++c) {
            int best = -1;  // -1 is x = 0 where V = 0
            double vb = 0;
            for (int i = 0; i < m; ++i) {
                double v = 2 * B(i, c);
                if (v < vb) {
                    vb = v;
                    best = i;
                }
            }
            double y = (best + 1.0) / m;
            c1.add(y - 0.5);
            y2.add(y * y);
            y4.add(y * y * y * y);
        }
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.centered = c1.estimate("y_m - 1/2", cfg.seed, wall);
    r.y2 = y2.estimate("y_m^2", cfg.seed, wall);
    r.y4 = y4.estimate("y_m^4", cfg.seed, wall);
    return r;
}

}  // namespace logmax::mc
