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

// Brute-force verifiers used to check the bounds before trusting them.
//
// * sep_prefix_supremum: heuristic (lower-bound) estimate of the largest
//   selected probability mass reachable by a pure product state.
// * state_prefix_supremum: exact largest selected mass over all states.
// * falsify_bound: randomized search for a state violating a bound.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "majorant/error.hpp"
#include "majorant/majorization.hpp"
#include "majorant/numerics.hpp"
#include "majorant/observables.hpp"
#include "majorant/random.hpp"
#include "majorant/states.hpp"

namespace majorant {

/// Outcome groups I of a first product observable and J of a second one,
/// |I| + |J| = l >= 1.
class SelectionProblem {
public:
    SelectionProblem(Observable first, Observable second, Eigen::Index dim_a, Eigen::Index dim_b,
                     std::vector<std::size_t> first_groups, std::vector<std::size_t> second_groups)
        : first_(std::move(first)),
          second_(std::move(second)),
          dim_a_(dim_a),
          dim_b_(dim_b),
          first_groups_(std::move(first_groups)),
          second_groups_(std::move(second_groups)) {
        if (first_.dim() != dim_a_ * dim_b_ || second_.dim() != dim_a_ * dim_b_) {
            throw Error(ErrorCode::DimensionMismatch, "product observables do not act on dim_a * dim_b");
        }
        if (first_groups_.size() + second_groups_.size() == 0) {
            throw Error(ErrorCode::InvalidSelection, "selection must contain at least one outcome");
        }
        check(first_groups_, first_, "I");
        check(second_groups_, second_, "J");
        selection_ = ComplexMatrix::Zero(first_.dim(), first_.dim());
        for (std::size_t g : first_groups_) selection_ += first_.groups()[g].projector;
        for (std::size_t g : second_groups_) selection_ += second_.groups()[g].projector;
    }

    /// Selection on a pair of local observable pairs: first = X_A (x) X_B,
    /// second = Z_A (x) Z_B.
    static SelectionProblem from_pairs(const ObservablePair& pair_a, const ObservablePair& pair_b,
                                       std::vector<std::size_t> first_groups, std::vector<std::size_t> second_groups,
                                       double cluster_tol = kClusterTol) {
        return SelectionProblem(product_observable(pair_a.x, pair_b.x, cluster_tol),
                                product_observable(pair_a.z, pair_b.z, cluster_tol), pair_a.dim(), pair_b.dim(),
                                std::move(first_groups), std::move(second_groups));
    }

    const Observable& first() const { return first_; }
    const Observable& second() const { return second_; }
    Eigen::Index dim_a() const { return dim_a_; }
    Eigen::Index dim_b() const { return dim_b_; }
    const std::vector<std::size_t>& first_groups() const { return first_groups_; }
    const std::vector<std::size_t>& second_groups() const { return second_groups_; }
    std::size_t size() const { return first_groups_.size() + second_groups_.size(); }

    /// Sum of the selected projectors; <psi|S|psi> is the selected mass.
    const ComplexMatrix& selection_operator() const { return selection_; }

    std::vector<ComplexMatrix> projectors() const {
        std::vector<ComplexMatrix> out;
        for (std::size_t g : first_groups_) out.push_back(first_.groups()[g].projector);
        for (std::size_t g : second_groups_) out.push_back(second_.groups()[g].projector);
        return out;
    }

private:
    static void check(const std::vector<std::size_t>& idx, const Observable& obs, const char* name) {
        std::set<std::size_t> seen;
        for (std::size_t g : idx) {
            if (g >= obs.outcome_count()) {
                throw Error(ErrorCode::InvalidSelection, std::string("index ") + std::to_string(g) + " in " + name +
                                                             " exceeds the " + std::to_string(obs.outcome_count()) +
                                                             " outcome groups");
            }
            if (!seen.insert(g).second) {
                throw Error(ErrorCode::InvalidSelection, std::string("duplicate index in ") + name);
            }
        }
    }

    Observable first_;
    Observable second_;
    Eigen::Index dim_a_;
    Eigen::Index dim_b_;
    std::vector<std::size_t> first_groups_;
    std::vector<std::size_t> second_groups_;
    ComplexMatrix selection_;
};

struct AscentOptions {
    std::size_t restarts = 32;
    std::size_t max_iterations = 500;
    double convergence = 1e-10;
};

/// Objective history of one alternating ascent run.
struct AscentTrace {
    std::vector<double> objective;  // after each full A-then-B sweep
    ComplexVector a;
    ComplexVector b;
};

struct SeparableEstimate {
    double value = 0.0;
    /// Always true: alternating ascent only certifies a lower bound on the
    /// separable supremum.
    bool lower_bound = true;
    std::size_t best_restart = 0;
    std::size_t iterations = 0;
};

namespace detail {

/// <b| S |b> as an operator on A, for S on A (x) B.
inline ComplexMatrix condition_on_b(const ComplexMatrix& s, const ComplexVector& b, Eigen::Index da, Eigen::Index db) {
    ComplexMatrix out(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j) out(i, j) = b.dot(s.block(i * db, j * db, db, db) * b);
    return 0.5 * (out + out.adjoint());
}

/// <a| S |a> as an operator on B.
inline ComplexMatrix condition_on_a(const ComplexMatrix& s, const ComplexVector& a, Eigen::Index da, Eigen::Index db) {
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j) out += std::conj(a[i]) * a[j] * s.block(i * db, j * db, db, db);
    return 0.5 * (out + out.adjoint());
}

inline std::pair<double, ComplexVector> top_eigenpair(const ComplexMatrix& h) {
    const HermitianEigensystem es = hermitian_eig(h);
    return {es.eigenvalues[0], es.eigenvectors.col(0)};
}

}  // namespace detail

/// Alternating maximization from a given B-side start: each half step sets
/// one factor to the top eigenvector of the operator conditioned on the
/// other, so the objective never decreases.
inline AscentTrace ascend(const SelectionProblem& problem, ComplexVector start_b, const AscentOptions& options = {}) {
    const ComplexMatrix& s = problem.selection_operator();
    const Eigen::Index da = problem.dim_a();
    const Eigen::Index db = problem.dim_b();
    AscentTrace trace{{}, ComplexVector(da), std::move(start_b)};
    double previous = -1.0;
    for (std::size_t it = 0; it < options.max_iterations; ++it) {
        trace.a = detail::top_eigenpair(detail::condition_on_b(s, trace.b, da, db)).second;
        auto [value, b] = detail::top_eigenpair(detail::condition_on_a(s, trace.a, da, db));
        trace.b = std::move(b);
        trace.objective.push_back(value);
        if (std::abs(value - previous) < options.convergence) break;
        previous = value;
    }
    return trace;
}

inline SeparableEstimate sep_prefix_supremum(const SelectionProblem& problem, std::uint64_t seed,
                                             const AscentOptions& options = {}) {
    if (problem.dim_a() > 4 || problem.dim_b() > 4) {
        throw Error(ErrorCode::DimensionTooLarge, "pure-product search supports local dimensions up to 4");
    }
    if (options.restarts < 1) throw Error(ErrorCode::ParameterOutOfRange, "restarts must be at least 1");
    Rng master(seed);
    SeparableEstimate best;
    best.value = -1.0;
    for (std::size_t r = 0; r < options.restarts; ++r) {
        Rng rng = master.split();
        const AscentTrace trace = ascend(problem, haar_vector(problem.dim_b(), rng), options);
        best.iterations += trace.objective.size();
        if (trace.objective.back() > best.value) {
            best.value = trace.objective.back();
            best.best_restart = r;
        }
    }
    return best;
}

/// Exact max over all states of the total mass on the given projectors.
inline double state_prefix_supremum(std::span<const ComplexMatrix> projectors) {
    if (projectors.empty()) throw Error(ErrorCode::InvalidSelection, "no projectors given");
    const Eigen::Index d = projectors.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& p : projectors) {
        if (p.rows() != d || p.cols() != d) throw Error(ErrorCode::DimensionMismatch, "projector dimensions differ");
        require_hermitian(p, "projector");
        sum += p;
    }
    return max_eigenvalue(sum);
}

// ---------------------------------------------------------------------------
// Randomized falsification

using DistributionBuilder = std::function<ProbabilityVector(const ComplexMatrix&)>;

struct FalsifyOptions {
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    double tol = kMajorizationTol;
    /// States checked before any random draw.
    std::vector<ComplexMatrix> probes;
};

struct Counterexample {
    ComplexMatrix state;
    ProbabilityVector distribution;
    std::size_t k;
    double lhs;
    double rhs;
    /// Position in the probe list, or the random draw index after the probes.
    std::size_t index;
    bool from_probe;
};

namespace detail {

inline std::optional<Counterexample> check_against(const MajorizationBound& bound, const ComplexMatrix& rho,
                                                   const DistributionBuilder& builder, double tol) {
    ProbabilityVector p = builder(rho);
    if (std::abs(p.total() - bound.total()) > tol) {
        throw Error(ErrorCode::TotalMismatch, "distribution total differs from the bound total");
    }
    const std::vector<double> prefix = descending_prefix_sums(p.components());
    for (std::size_t k = 1; k <= prefix.size(); ++k) {
        if (prefix[k - 1] > bound.prefix_at(k) + tol) {
            return Counterexample{rho, std::move(p), k, prefix[k - 1], bound.prefix_at(k), 0, false};
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// First state whose distribution breaks the bound beyond tol. Random draws
/// alternate between Haar-random pure states and random mixed states.
inline std::optional<Counterexample> falsify_bound(const MajorizationBound& bound, Eigen::Index dim,
                                                   const DistributionBuilder& builder,
                                                   const FalsifyOptions& options = {}) {
    if (options.samples < 1) throw Error(ErrorCode::ParameterOutOfRange, "samples must be at least 1");
    for (std::size_t i = 0; i < options.probes.size(); ++i) {
        if (auto c = detail::check_against(bound, options.probes[i], builder, options.tol)) {
            c->index = i;
            c->from_probe = true;
            return c;
        }
    }
    Rng rng(options.seed);
    for (std::size_t i = 0; i < options.samples; ++i) {
        const ComplexMatrix rho = i % 2 == 0 ? haar_pure(dim, rng) : random_mixed(dim, rng);
        if (auto c = detail::check_against(bound, rho, builder, options.tol)) {
            c->index = i;
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace majorant
