#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "antiexact/errors.hpp"

namespace antiexact {

/// Monomial exponent tuple for coordinates x_1..x_n. Ordered graded-lex so
/// that map iteration visits low total degrees first.
class MultiIndex {
public:
    explicit MultiIndex(int dim) : exps_(dim, 0), total_(0) {}
    explicit MultiIndex(std::vector<int> exps)
        : exps_(std::move(exps)), total_(std::accumulate(exps_.begin(), exps_.end(), 0)) {
        for (int e : exps_)
            if (e < 0) throw Error("negative exponent in multi-index");
    }

    int dim() const { return static_cast<int>(exps_.size()); }
    int total_degree() const { return total_; }
    int operator[](int i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    /// Exponent of x_{i} raised by delta (i is 0-based).
    MultiIndex raised(int i, int delta = 1) const {
        MultiIndex r = *this;
        r.exps_[i] += delta;
        r.total_ += delta;
        if (r.exps_[i] < 0) throw Error("negative exponent in multi-index");
        return r;
    }

    MultiIndex plus(const MultiIndex& o) const {
        if (dim() != o.dim()) throw DimensionMismatch("multi-index dimension mismatch");
        MultiIndex r = *this;
        for (int i = 0; i < dim(); ++i) r.exps_[i] += o.exps_[i];
        r.total_ += o.total_;
        return r;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        if (a.total_ != b.total_) return a.total_ < b.total_;
        return a.exps_ < b.exps_;
    }

private:
    std::vector<int> exps_;
    int total_;
};

/// All multi-indices of the given dimension with total degree <= max_total,
/// in graded-lex order.
std::vector<MultiIndex> all_multi_indices(int dim, int max_total);

}  // namespace antiexact
