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

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "majorant/error.hpp"
#include "majorant/majorization.hpp"
#include "majorant/numerics.hpp"
#include "majorant/random.hpp"

namespace majorant {

/// Adjacent eigenvalues closer than this are treated as one outcome.
inline constexpr double kClusterTol = 1e-8;
/// Lowest eigenvalue accepted for a density matrix.
inline constexpr double kStateEigenFloor = -1e-9;
inline constexpr double kStateTraceTol = 1e-9;

/// One measurement outcome: a distinct eigenvalue and the projector onto its
/// full eigenspace.
struct SpectralGroup {
    double eigenvalue;
    ComplexMatrix projector;
    ComplexMatrix basis;  // orthonormal columns spanning the eigenspace

    Eigen::Index rank() const { return basis.cols(); }
};

/// Hermitian operator together with its unique decomposition into
/// maximal-rank orthogonal projectors, groups ordered by descending
/// eigenvalue.
class Observable {
public:
    Observable() = default;
    Observable(ComplexMatrix matrix, std::vector<SpectralGroup> groups)
        : matrix_(std::move(matrix)), groups_(std::move(groups)) {}

    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<SpectralGroup>& groups() const { return groups_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    std::size_t outcome_count() const { return groups_.size(); }

    bool is_rank_one() const {
        return static_cast<Eigen::Index>(groups_.size()) == dim();
    }

    /// Eigenvector of group i; only meaningful for rank-one observables.
    ComplexVector eigenvector(std::size_t i) const { return groups_[i].basis.col(0); }

    std::vector<double> eigenvalues() const {
        std::vector<double> out;
        out.reserve(groups_.size());
        for (const auto& g : groups_) out.push_back(g.eigenvalue);
        return out;
    }

private:
    ComplexMatrix matrix_;
    std::vector<SpectralGroup> groups_;
};

inline Observable decompose(const ComplexMatrix& a, double cluster_tol = kClusterTol) {
    const HermitianEigensystem es = hermitian_eig(a);
    const Eigen::Index n = a.rows();
    std::vector<SpectralGroup> groups;
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index end = start + 1;
        while (end < n && es.eigenvalues[end - 1] - es.eigenvalues[end] <= cluster_tol) ++end;
        const Eigen::Index width = end - start;
        ComplexMatrix basis = es.eigenvectors.middleCols(start, width);
        SpectralGroup g{es.eigenvalues.segment(start, width).mean(), basis * basis.adjoint(), basis};
        groups.push_back(std::move(g));
        start = end;
    }
    return Observable(a, std::move(groups));
}

/// Two rank-one observables on the same space.
struct ObservablePair {
    Observable x;
    Observable z;

    ObservablePair() = default;
    ObservablePair(Observable x_, Observable z_) : x(std::move(x_)), z(std::move(z_)) {
        if (x.dim() != z.dim()) {
            throw Error(ErrorCode::DimensionMismatch, "observable pair has mismatched dimensions");
        }
    }

    Eigen::Index dim() const { return x.dim(); }

    void require_rank_one() const {
        if (!x.is_rank_one() || !z.is_rank_one()) {
            throw Error(ErrorCode::NotRankOne, "bound requires two rank-one projective observables");
        }
    }
};

/// Throws InvalidState unless rho is a density matrix (Hermitian, PSD within
/// kStateEigenFloor, unit trace within kStateTraceTol).
inline void validate_state(const ComplexMatrix& rho) {
    if (rho.size() == 0 || rho.rows() != rho.cols()) {
        throw Error(ErrorCode::InvalidState, "state must be a non-empty square matrix");
    }
    if (!all_finite(rho)) throw Error(ErrorCode::InvalidState, "state has non-finite entries");
    if (!is_hermitian(rho)) throw Error(ErrorCode::InvalidState, "state is not Hermitian");
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > kStateTraceTol) {
        throw Error(ErrorCode::InvalidState, "state trace is " + std::to_string(tr));
    }
    const RealVector ev = hermitian_eigenvalues(rho);
    if (ev[ev.size() - 1] < kStateEigenFloor) {
        throw Error(ErrorCode::InvalidState,
                    "state has negative eigenvalue " + std::to_string(ev[ev.size() - 1]));
    }
}

/// p_g = tr(P_g rho) for every outcome group.
inline ProbabilityVector induced_distribution(const Observable& obs, const ComplexMatrix& rho) {
    if (rho.rows() != obs.dim() || rho.cols() != obs.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "state dimension " + std::to_string(rho.rows()) + " does not match observable dimension " +
                        std::to_string(obs.dim()));
    }
    validate_state(rho);
    std::vector<double> p;
    p.reserve(obs.outcome_count());
    for (const auto& g : obs.groups()) {
        // tr(P rho) = sum_ij P_ij rho_ji
        p.push_back((g.projector.transpose().cwiseProduct(rho)).sum().real());
    }
    return ProbabilityVector(std::move(p), 1.0);
}

/// Decomposition of xa (x) xb, so outcomes (i, j) sharing an eigenvalue
/// product land in one group.
inline Observable product_observable(const Observable& xa, const Observable& xb,
                                     double cluster_tol = kClusterTol) {
    return decompose(kron(xa.matrix(), xb.matrix()), cluster_tol);
}

/// For rank-one factors, checks that no grouped outcome of the product
/// contains two index pairs sharing a row or a column index. A shared index
/// happens exactly when a factor has a zero eigenvalue (or two products
/// collide within the clustering tolerance); the grouped joint distribution is
/// then no longer majorized by its marginals and the separability bounds do
/// not apply.
inline bool groups_respect_factors(const Observable& xa, const Observable& xb, const Observable& product) {
    if (!xa.is_rank_one() || !xb.is_rank_one()) return true;
    const Eigen::Index da = xa.dim();
    const Eigen::Index db = xb.dim();
    for (const auto& g : product.groups()) {
        std::vector<int> row_hits(da, 0);
        std::vector<int> col_hits(db, 0);
        for (Eigen::Index i = 0; i < da; ++i) {
            for (Eigen::Index j = 0; j < db; ++j) {
                const ComplexVector v = kron_vector(xa.eigenvector(i), xb.eigenvector(j));
                const double w = (v.adjoint() * g.projector * v)(0, 0).real();
                if (w > 0.5) {
                    if (++row_hits[i] > 1 || ++col_hits[j] > 1) return false;
                }
            }
        }
    }
    return true;
}

/// Empirical frequencies from `shots` draws of the distribution.
inline ProbabilityVector sample_distribution(const ProbabilityVector& p, std::size_t shots, Rng& rng) {
    if (shots == 0) throw Error(ErrorCode::ParameterOutOfRange, "shots must be positive");
    std::vector<double> counts(p.size(), 0.0);
    const double total = p.total();
    for (std::size_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * total;
        double acc = 0.0;
        std::size_t pick = p.size() - 1;
        for (std::size_t i = 0; i < p.size(); ++i) {
            acc += p[i];
            if (u < acc) {
                pick = i;
                break;
            }
        }
        counts[pick] += 1.0;
    }
    for (auto& c : counts) c = c * total / static_cast<double>(shots);
    return ProbabilityVector(std::move(counts), total);
}

}  // namespace majorant
