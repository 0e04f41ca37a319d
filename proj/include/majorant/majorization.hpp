// Copyright 2026 The Majorant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "majorant/error.hpp"

namespace majorant {

/// Default absolute tolerance on prefix-sum comparisons.
inline constexpr double kMajorizationTol = 1e-9;
/// Components in [-kClampTol, 0) are treated as rounding noise and set to 0.
inline constexpr double kClampTol = 1e-12;
/// Allowed |sum - total| for a probability vector.
inline constexpr double kTotalTol = 1e-9;

/// Non-negative vector with a known total mass: one distribution has total
/// 1, a direct sum of L distributions has total L.
class ProbabilityVector {
public:
    ProbabilityVector() = default;

    ProbabilityVector(std::vector<double> components, double total)
        : components_(std::move(components)), total_(total) {
        double sum = 0.0;
        for (double& c : components_) {
            if (!std::isfinite(c)) {
                throw Error(ErrorCode::InvalidDistribution, "non-finite component");
            }
            if (c < 0.0) {
                if (c < -kClampTol) {
                    throw Error(ErrorCode::InvalidDistribution,
                                "negative component " + std::to_string(c));
                }
                c = 0.0;
            }
            sum += c;
        }
        if (std::abs(sum - total_) > kTotalTol) {
            throw Error(ErrorCode::InvalidDistribution,
                        "components sum to " + std::to_string(sum) + ", expected " +
                            std::to_string(total_));
        }
    }

    /// Total taken as the sum of the components.
    static ProbabilityVector from_components(std::vector<double> components) {
        double sum = 0.0;
        for (double c : components) sum += c < 0.0 && c >= -kClampTol ? 0.0 : c;
        return ProbabilityVector(std::move(components), sum);
    }

    std::span<const double> components() const { return components_; }
    const std::vector<double>& values() const { return components_; }
    double total() const { return total_; }
    std::size_t size() const { return components_.size(); }
    double operator[](std::size_t i) const { return components_[i]; }

private:
    std::vector<double> components_;
    double total_ = 0.0;
};

/// Sums of the k largest entries, k = 1..n (entry i holds k = i + 1).
inline std::vector<double> descending_prefix_sums(std::span<const double> v) {
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<double> prefix(sorted.size());
    std::partial_sum(sorted.begin(), sorted.end(), prefix.begin());
    return prefix;
}

/// Descending majorization ceiling with cached prefix sums.
class MajorizationBound {
public:
    MajorizationBound() = default;

    explicit MajorizationBound(std::vector<double> omega) : omega_(std::move(omega)) {
        for (std::size_t i = 1; i < omega_.size(); ++i) {
            if (omega_[i] > omega_[i - 1] + kClampTol) {
                throw Error(ErrorCode::InvalidDistribution, "bound vector is not descending");
            }
        }
        prefix_.resize(omega_.size());
        std::partial_sum(omega_.begin(), omega_.end(), prefix_.begin());
        total_ = prefix_.empty() ? 0.0 : prefix_.back();
    }

    const std::vector<double>& omega() const { return omega_; }
    /// prefix()[i] is the sum of the first i + 1 components.
    const std::vector<double>& prefix() const { return prefix_; }
    double total() const { return total_; }
    std::size_t size() const { return omega_.size(); }

    /// Omega_k with 1-based k; Omega_0 = 0 and the vector is zero-padded past
    /// its length.
    double prefix_at(std::size_t k) const {
        if (k == 0) return 0.0;
        if (k > prefix_.size()) return total_;
        return prefix_[k - 1];
    }

private:
    std::vector<double> omega_;
    std::vector<double> prefix_;
    double total_ = 0.0;
};

inline ProbabilityVector sort_descending(const ProbabilityVector& p) {
    std::vector<double> v = p.values();
    std::sort(v.begin(), v.end(), std::greater<>());
    return ProbabilityVector(std::move(v), p.total());
}

/// True iff p is majorized by q. The shorter vector is zero-padded; totals
/// must agree within tol.
inline bool majorizes(std::span<const double> q, std::span<const double> p, double tol = kMajorizationTol) {
    const std::vector<double> qp = descending_prefix_sums(q);
    const std::vector<double> pp = descending_prefix_sums(p);
    const double qt = qp.empty() ? 0.0 : qp.back();
    const double pt = pp.empty() ? 0.0 : pp.back();
    if (std::abs(qt - pt) > tol) {
        throw Error(ErrorCode::TotalMismatch,
                    "totals differ: " + std::to_string(qt) + " vs " + std::to_string(pt));
    }
    const std::size_t n = std::max(qp.size(), pp.size());
    for (std::size_t i = 0; i < n; ++i) {
        const double qi = i < qp.size() ? qp[i] : qt;
        const double pi = i < pp.size() ? pp[i] : pt;
        if (pi > qi + tol) return false;
    }
    return true;
}

inline bool majorizes(const ProbabilityVector& q, const ProbabilityVector& p, double tol = kMajorizationTol) {
    return majorizes(q.components(), p.components(), tol);
}

inline bool majorizes(const MajorizationBound& q, const ProbabilityVector& p, double tol = kMajorizationTol) {
    return majorizes(std::span<const double>(q.omega()), p.components(), tol);
}

/// Block-merging isotonic averaging: adjacent blocks whose means break the
/// descending order are pooled and replaced by their mean until none remain.
/// This is the exact limit of repeatedly averaging out-of-order pairs.
inline std::vector<double> flatten(std::span<const double> v) {
    struct Block {
        double sum;
        std::size_t count;
        double mean() const { return sum / static_cast<double>(count); }
    };
    std::vector<Block> blocks;
    blocks.reserve(v.size());
    for (double x : v) {
        if (x < -kClampTol) throw Error(ErrorCode::InvalidDistribution, "flatten needs non-negative input");
        blocks.push_back({x, 1});
        while (blocks.size() >= 2 && blocks[blocks.size() - 2].mean() < blocks.back().mean()) {
            const Block last = blocks.back();
            blocks.pop_back();
            blocks.back().sum += last.sum;
            blocks.back().count += last.count;
        }
    }
    std::vector<double> out;
    out.reserve(v.size());
    for (const Block& b : blocks) out.insert(out.end(), b.count, b.mean());
    return out;
}

/// Least upper bound of a set of vectors under majorization.
inline MajorizationBound supremum(std::span<const ProbabilityVector> set) {
    if (set.empty()) throw Error(ErrorCode::InvalidDistribution, "supremum of an empty set");
    const double total = set.front().total();
    std::size_t d = 0;
    for (const auto& p : set) {
        if (std::abs(p.total() - total) > kTotalTol) {
            throw Error(ErrorCode::TotalMismatch, "supremum members have different totals");
        }
        d = std::max(d, p.size());
    }
    std::vector<double> ceiling(d, 0.0);
    for (const auto& p : set) {
        const std::vector<double> prefix = descending_prefix_sums(p.components());
        for (std::size_t k = 0; k < d; ++k) {
            const double value = k < prefix.size() ? prefix[k] : (prefix.empty() ? 0.0 : prefix.back());
            ceiling[k] = std::max(ceiling[k], value);
        }
    }
    std::vector<double> raw(d);
    std::adjacent_difference(ceiling.begin(), ceiling.end(), raw.begin());
    return MajorizationBound(flatten(raw));
}

inline MajorizationBound supremum(std::initializer_list<ProbabilityVector> set) {
    return supremum(std::span<const ProbabilityVector>(set.begin(), set.size()));
}

/// Concatenation of several distributions; the total is the sum of totals.
inline ProbabilityVector direct_sum(std::span<const ProbabilityVector> parts) {
    std::vector<double> v;
    double total = 0.0;
    for (const auto& p : parts) {
        v.insert(v.end(), p.values().begin(), p.values().end());
        total += p.total();
    }
    return ProbabilityVector(std::move(v), total);
}

inline ProbabilityVector direct_sum(std::initializer_list<ProbabilityVector> parts) {
    return direct_sum(std::span<const ProbabilityVector>(parts.begin(), parts.size()));
}

}  // namespace majorant
