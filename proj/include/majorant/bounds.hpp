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

// Direct-sum majorization uncertainty bounds.
//
// Two observables: with U_ij = <x_i|z_j>, s_k is the largest operator norm
// over submatrices of U with (#rows + #cols) = k + 1, and the bound is
// {1} (+) (s_1, s_2 - s_1, ..., s_d - s_{d-1}, 0, ..., 0), flattened.
//
// Many observables: s_k is the largest eigenvalue of a sum of k eigenprojectors
// drawn from the L bases (any number, including none, from each); the bound is
// (s_1, s_2 - s_1, ..., L - s_a, 0, ..., 0) where s_{a+1} is the first to reach L.
// For L = 2 this reproduces the two-observable bound, since
// lambda_max(P_R + Q_C) = 1 + ||U[R, C]|| whenever R and C are both non-empty.

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "majorant/error.hpp"
#include "majorant/majorization.hpp"
#include "majorant/numerics.hpp"
#include "majorant/observables.hpp"

namespace majorant {

/// Guards on the combinatorial enumerations.
struct Limits {
    /// Largest d for the two-observable submatrix enumeration (4^d submatrices).
    std::size_t max_dim = 8;
    /// Largest L * d for the many-observable enumeration (2^(L d) subsets).
    std::size_t max_many_cost = 12;
};

inline constexpr double kUnitaryTol = 1e-9;

class OverlapMatrix {
public:
    explicit OverlapMatrix(ComplexMatrix u) : u_(std::move(u)) {
        require_finite(u_, "overlap matrix");
        if (u_.rows() != u_.cols()) throw Error(ErrorCode::DimensionMismatch, "overlap matrix must be square");
        const ComplexMatrix gram = u_.adjoint() * u_;
        const double err = max_abs_entry(gram - ComplexMatrix::Identity(u_.rows(), u_.cols()));
        if (err > kUnitaryTol) {
            throw Error(ErrorCode::NotUnitary, "overlap matrix is not unitary (error " + std::to_string(err) + ")");
        }
        magnitudes_ = u_.cwiseAbs();
    }

    const ComplexMatrix& u() const { return u_; }
    const Eigen::MatrixXd& magnitudes() const { return magnitudes_; }
    Eigen::Index dim() const { return u_.rows(); }

private:
    ComplexMatrix u_;
    Eigen::MatrixXd magnitudes_;
};

enum class CoefficientMode { TwoObservable, ManyObservable };

struct SCoefficients {
    std::vector<double> s;  // s[0] is s_1
    CoefficientMode mode = CoefficientMode::TwoObservable;
    std::size_t observable_count = 2;
};

inline OverlapMatrix overlap_matrix(const ObservablePair& pair) {
    pair.require_rank_one();
    const Eigen::Index d = pair.dim();
    ComplexMatrix u(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            u(i, j) = pair.x.eigenvector(i).dot(pair.z.eigenvector(j));  // conjugates the left argument
    return OverlapMatrix(std::move(u));
}

namespace detail {

inline std::vector<Eigen::Index> mask_indices(std::uint32_t mask) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) idx.push_back(i);
    return idx;
}

}  // namespace detail

inline SCoefficients submatrix_coefficients(const OverlapMatrix& u, const Limits& limits = {}) {
    const auto d = static_cast<std::size_t>(u.dim());
    if (d > limits.max_dim) {
        throw Error(ErrorCode::DimensionTooLarge,
                    "submatrix enumeration at d = " + std::to_string(d) + " exceeds the limit " +
                        std::to_string(limits.max_dim));
    }
    std::vector<double> s(d, 0.0);
    const std::uint32_t full = (1u << d) - 1u;
    for (std::uint32_t rows = 1; rows <= full; ++rows) {
        const auto r = static_cast<std::size_t>(std::popcount(rows));
        const std::vector<Eigen::Index> ri = detail::mask_indices(rows);
        for (std::uint32_t cols = 1; cols <= full; ++cols) {
            const auto c = static_cast<std::size_t>(std::popcount(cols));
            const std::size_t k = r + c - 1;
            if (k > d) continue;
            const std::vector<Eigen::Index> ci = detail::mask_indices(cols);
            ComplexMatrix m(ri.size(), ci.size());
            for (std::size_t a = 0; a < ri.size(); ++a)
                for (std::size_t b = 0; b < ci.size(); ++b) m(a, b) = u.u()(ri[a], ci[b]);
            s[k - 1] = std::max(s[k - 1], operator_norm(m));
        }
    }
    return {std::move(s), CoefficientMode::TwoObservable, 2};
}

inline MajorizationBound direct_sum_bound(const ObservablePair& pair, const Limits& limits = {}) {
    const SCoefficients coeffs = submatrix_coefficients(overlap_matrix(pair), limits);
    const std::size_t d = coeffs.s.size();
    std::vector<double> raw;
    raw.reserve(2 * d);
    raw.push_back(1.0);
    raw.push_back(coeffs.s[0]);
    for (std::size_t k = 1; k < d; ++k) raw.push_back(coeffs.s[k] - coeffs.s[k - 1]);
    raw.resize(2 * d, 0.0);
    return MajorizationBound(flatten(raw));
}

namespace detail {

inline void require_common_rank_one(std::span<const Observable> obs, const Limits& limits) {
    if (obs.empty()) throw Error(ErrorCode::DimensionMismatch, "need at least one observable");
    const Eigen::Index d = obs.front().dim();
    for (const auto& o : obs) {
        if (o.dim() != d) throw Error(ErrorCode::DimensionMismatch, "observables have different dimensions");
        if (!o.is_rank_one()) throw Error(ErrorCode::NotRankOne, "bound requires rank-one projective observables");
    }
    const std::size_t cost = obs.size() * static_cast<std::size_t>(d);
    if (cost > limits.max_many_cost || cost >= 32) {
        throw Error(ErrorCode::DimensionTooLarge,
                    "many-observable enumeration with L*d = " + std::to_string(cost) + " exceeds the limit " +
                        std::to_string(limits.max_many_cost));
    }
}

}  // namespace detail

inline SCoefficients many_coefficients(std::span<const Observable> obs, const Limits& limits = {}) {
    detail::require_common_rank_one(obs, limits);
    const Eigen::Index d = obs.front().dim();
    const auto big_l = static_cast<double>(obs.size());
    const std::size_t n = obs.size() * static_cast<std::size_t>(d);

    // Column l*d + i is the i-th eigenvector of observable l.
    ComplexMatrix vectors(d, static_cast<Eigen::Index>(n));
    for (std::size_t l = 0; l < obs.size(); ++l)
        for (Eigen::Index i = 0; i < d; ++i) vectors.col(static_cast<Eigen::Index>(l) * d + i) = obs[l].eigenvector(i);

    std::vector<double> s(n, 0.0);
    const std::uint32_t full = n == 32 ? UINT32_MAX : (1u << n) - 1u;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        const std::vector<Eigen::Index> idx = detail::mask_indices(mask);
        ComplexMatrix sum = ComplexMatrix::Zero(d, d);
        for (Eigen::Index c : idx) sum += vectors.col(c) * vectors.col(c).adjoint();
        const std::size_t k = idx.size();
        s[k - 1] = std::max(s[k - 1], max_eigenvalue(sum));
    }
    // Keep s_1 .. s_{a+1}, where s_{a+1} is the first to reach L.
    std::size_t last = n;
    for (std::size_t k = 0; k < n; ++k) {
        if (s[k] >= big_l - kMajorizationTol) {
            last = k + 1;
            break;
        }
    }
    s.resize(last);
    return {std::move(s), CoefficientMode::ManyObservable, obs.size()};
}

inline MajorizationBound many_bound(std::span<const Observable> obs, const Limits& limits = {}) {
    const SCoefficients coeffs = many_coefficients(obs, limits);
    const std::size_t length = obs.size() * static_cast<std::size_t>(obs.front().dim());
    std::vector<double> raw;
    raw.reserve(length);
    raw.push_back(coeffs.s[0]);
    for (std::size_t k = 1; k < coeffs.s.size(); ++k) raw.push_back(coeffs.s[k] - coeffs.s[k - 1]);
    raw.resize(length, 0.0);
    return MajorizationBound(flatten(raw));
}

}  // namespace majorant
