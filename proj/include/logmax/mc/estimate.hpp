#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace logmax::mc {

struct McEstimate {
    std::string observable;
    double mean = 0;
    double stderr_ = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    double wall_seconds = 0;

    double z_score(double exact) const { return stderr_ > 0 ? (mean - exact) / stderr_ : INFINITY; }
};

/// Running (count, sum, sum of squares); merging is associative.
struct Accumulator {
    long count = 0;
    double sum = 0;
    double sumsq = 0;

    void add(double x) {
        ++count;
        sum += x;
        sumsq += x * x;
    }
    void merge(const Accumulator& o) {
        count += o.count;
        sum += o.sum;
        sumsq += o.sumsq;
    }
    double mean() const { return count ? sum / static_cast<double>(count) : NAN; }
    double variance() const {
        if (count < 2) return NAN;
        double m = mean();
        return (sumsq - static_cast<double>(count) * m * m) / static_cast<double>(count - 1);
    }
    double stderr_of_mean() const { return std::sqrt(variance() / static_cast<double>(count)); }

    McEstimate estimate(std::string name, std::uint64_t seed, double wall = 0) const {
        return {std::move(name), mean(), stderr_of_mean(), count, seed, wall};
    }
};

/// Batch means for correlated chains: each full batch contributes its mean as one sample.
class BatchMeans {
public:
    explicit BatchMeans(long batch_size) : size_(batch_size < 1 ? 1 : batch_size) {}

    void add(double x) {
        cur_ += x;
        if (++n_ == size_) {
            batches_.add(cur_ / static_cast<double>(size_));
            cur_ = 0;
            n_ = 0;
        }
    }
    const Accumulator& batches() const { return batches_; }

    McEstimate estimate(std::string name, std::uint64_t seed, double wall = 0) const {
        return batches_.estimate(std::move(name), seed, wall);
    }

private:
    long size_;
    long n_ = 0;
    double cur_ = 0;
    Accumulator batches_;
};

}  // namespace logmax::mc
