#pragma once

// Integer partitions and Young-diagram box statistics.
// Boxes are (i, j) with 1-based row i and column j.

#include "logmax/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace logmax {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (p_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i && p_[i] > p_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return p_; }
    int length() const { return static_cast<int>(p_.size()); }
    int size() const {
        int s = 0;
        for (int v : p_) s += v;
        return s;
    }
    bool empty() const { return p_.empty(); }

    /// lambda_i, 1-based; zero beyond the length.
    int operator[](int i) const { return i >= 1 && i <= length() ? p_[static_cast<std::size_t>(i - 1)] : 0; }

    Partition dual() const {
        std::vector<int> d;
        if (p_.empty()) return Partition();
        for (int j = 1; j <= p_[0]; ++j) {
            int c = 0;
            for (int v : p_)
                if (v >= j) ++c;
            d.push_back(c);
        }
        return Partition(std::move(d));
    }

    int arm(int i, int j) const { return (*this)[i] - j; }
    int leg(int i, int j) const { return column_length(j) - i; }
    static int coarm(int, int j) { return j - 1; }
    static int coleg(int i, int) { return i - 1; }

    int column_length(int j) const {
        int c = 0;
        for (int v : p_)
            if (v >= j) ++c;
        return c;
    }

    struct Box {
        int i, j;
    };
    std::vector<Box> boxes() const {
        std::vector<Box> b;
        for (int i = 1; i <= length(); ++i)
            for (int j = 1; j <= (*this)[i]; ++j) b.push_back({i, j});
        return b;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < p_.size(); ++i) s += (i ? "," : "") + std::to_string(p_[i]);
        return s + "]";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

private:
    std::vector<int> p_;
};

namespace detail {
inline void partitions_rec(int rest, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (rest == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int v = std::min(rest, maxpart); v >= 1; --v) {
        cur.push_back(v);
        partitions_rec(rest - v, v, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All partitions of k in lexicographically decreasing order: (k), (k-1,1), ..., (1^k).
inline std::vector<Partition> enumerate_partitions(int k) {
    if (k < 1) throw std::invalid_argument("enumerate_partitions: k must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(k, k, cur, out);
    return out;
}

/// c(lambda, alpha, t) = prod_s (alpha a(s) + l(s) + t).
template <class F>
F c_norm(const Partition& lam, const F& alpha, const F& t) {
    F r(1);
    for (auto [i, j] : lam.boxes()) r = r * (alpha * F(lam.arm(i, j)) + F(lam.leg(i, j)) + t);
    return r;
}

/// theta^lambda_(k)(alpha) = prod_{s != (1,1)} (alpha a'(s) - l'(s)).
template <class F>
F theta_onek(const Partition& lam, const F& alpha) {
    F r(1);
    for (auto [i, j] : lam.boxes()) {
        if (i == 1 && j == 1) continue;
        r = r * (alpha * F(Partition::coarm(i, j)) - F(Partition::coleg(i, j)));
    }
    return r;
}

}  // namespace logmax
