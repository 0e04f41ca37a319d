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

// Entanglement detection with product observables.
//
// For a separable state the grouped direct sum
//   p(X_A (x) X_B | rho) (+) p(Z_A (x) Z_B | rho)
// is majorized by the single-system bound of either side; a violated prefix
// inequality certifies entanglement. The many-observable detector does the
// same with L product observables against the many-observable bound.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "majorant/bounds.hpp"
#include "majorant/error.hpp"
#include "majorant/majorization.hpp"
#include "majorant/numerics.hpp"
#include "majorant/observables.hpp"
#include "majorant/states.hpp"

namespace majorant {

enum class Verdict { Entangled, Inconclusive };
enum class Side { A, B };

inline const char* to_string(Verdict v) { return v == Verdict::Entangled ? "Entangled" : "Inconclusive"; }
inline const char* to_string(Side s) { return s == Side::A ? "A" : "B"; }

struct DetectOptions {
    double tol = kMajorizationTol;
    double cluster_tol = kClusterTol;
    Limits limits{};
};

/// One prefix inequality: sum of the k largest measured values (lhs) against
/// the bound prefix Omega_k (rhs).
struct PrefixCheck {
    std::size_t k;
    double lhs;
    double rhs;
    double margin;  // lhs - rhs
    bool effective;
};

struct SideReport {
    Side side;
    MajorizationBound bound;
    std::vector<PrefixCheck> checks;  // every k = 1 .. n
    std::size_t effective_first = 0;  // 1-based inclusive; 0 when the range is empty
    std::size_t effective_last = 0;
};

struct Violation {
    Side side;
    std::size_t k;
    double lhs;
    double rhs;
    double margin;
};

struct DetectionReport {
    Verdict verdict = Verdict::Inconclusive;
    /// Largest margin lies in (0, tol]: not claimed as entangled.
    bool borderline = false;
    double tol = kMajorizationTol;
    ProbabilityVector distribution;  // the measured direct sum
    std::vector<SideReport> sides;
    std::vector<Violation> violations;

    /// "A", "B" or "both".
    std::string sides_tested() const {
        if (sides.size() == 2) return "both";
        return sides.empty() ? "none" : to_string(sides.front().side);
    }

    /// Largest margin over all effective inequalities of all sides.
    std::optional<PrefixCheck> worst() const {
        std::optional<PrefixCheck> best;
        for (const auto& s : sides)
            for (const auto& c : s.checks)
                if (c.effective && (!best || c.margin > best->margin)) best = c;
        return best;
    }
};

namespace detail {

using EffectivePredicate = std::function<bool(std::size_t k, double rhs)>;

inline SideReport compare_side(Side side, const MajorizationBound& bound, const ProbabilityVector& lhs,
                               const EffectivePredicate& effective) {
    SideReport report{side, bound, {}, 0, 0};
    const std::vector<double> lp = descending_prefix_sums(lhs.components());
    const double lt = lp.empty() ? 0.0 : lp.back();
    const std::size_t n = std::max(lp.size(), bound.size());
    report.checks.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const double l = k <= lp.size() ? lp[k - 1] : lt;
        const double r = bound.prefix_at(k);
        const bool eff = effective(k, r);
        report.checks.push_back({k, l, r, l - r, eff});
        if (eff) {
            if (report.effective_first == 0) report.effective_first = k;
            report.effective_last = k;
        }
    }
    return report;
}

inline void finalize(DetectionReport& report) {
    double best = -1.0;
    bool any = false;
    for (const auto& s : report.sides) {
        for (const auto& c : s.checks) {
            if (c.margin > report.tol) report.violations.push_back({s.side, c.k, c.lhs, c.rhs, c.margin});
            // Trivial checks tie up to rounding and never make a result borderline.
            if (!c.effective) continue;
            if (!any || c.margin > best) best = c.margin;
            any = true;
        }
    }
    report.verdict = report.violations.empty() ? Verdict::Inconclusive : Verdict::Entangled;
    report.borderline = report.violations.empty() && any && best > 0.0;
}

inline void require_state_dims(const ComplexMatrix& rho, Eigen::Index da, Eigen::Index db) {
    if (rho.rows() != da * db || rho.cols() != da * db) {
        throw Error(ErrorCode::DimensionMismatch,
                    "state is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                        " but the observables act on " + std::to_string(da) + "x" + std::to_string(db));
    }
    validate_state(rho);
}

inline Observable checked_product(const Observable& a, const Observable& b, double cluster_tol) {
    Observable p = product_observable(a, b, cluster_tol);
    if (!groups_respect_factors(a, b, p)) {
        throw Error(ErrorCode::DegenerateProduct,
                    "product observable merges outcomes sharing a local index (zero or colliding eigenvalues)");
    }
    return p;
}

}  // namespace detail

/// Two product observables X_A (x) X_B and Z_A (x) Z_B with both local bounds
/// computed once up front.
class PairDetector {
public:
    PairDetector(ObservablePair pair_a, ObservablePair pair_b, DetectOptions options = {})
        : pair_a_(std::move(pair_a)), pair_b_(std::move(pair_b)), options_(options) {
        pair_a_.require_rank_one();
        pair_b_.require_rank_one();
        product_x_ = detail::checked_product(pair_a_.x, pair_b_.x, options_.cluster_tol);
        product_z_ = detail::checked_product(pair_a_.z, pair_b_.z, options_.cluster_tol);
        const auto fits = [&](Eigen::Index d) { return static_cast<std::size_t>(d) <= options_.limits.max_dim; };
        if (fits(pair_a_.dim())) bound_a_ = direct_sum_bound(pair_a_, options_.limits);
        if (fits(pair_b_.dim())) bound_b_ = direct_sum_bound(pair_b_, options_.limits);
        if (!bound_a_ && !bound_b_) {
            throw Error(ErrorCode::DimensionTooLarge, "neither local dimension fits the enumeration limit");
        }
    }

    const Observable& product_x() const { return product_x_; }
    const Observable& product_z() const { return product_z_; }
    const std::optional<MajorizationBound>& bound_a() const { return bound_a_; }
    const std::optional<MajorizationBound>& bound_b() const { return bound_b_; }
    const DetectOptions& options() const { return options_; }

    /// Grouped product distributions, in the order (X, Z).
    std::vector<ProbabilityVector> distributions(const ComplexMatrix& rho) const {
        detail::require_state_dims(rho, pair_a_.dim(), pair_b_.dim());
        return {induced_distribution(product_x_, rho), induced_distribution(product_z_, rho)};
    }

    DetectionReport evaluate(const ProbabilityVector& direct) const {
        DetectionReport report;
        report.tol = options_.tol;
        report.distribution = direct;
        const auto add = [&](Side side, const MajorizationBound& bound, Eigen::Index d) {
            const auto last = static_cast<std::size_t>(d);
            report.sides.push_back(detail::compare_side(
                side, bound, direct, [last](std::size_t k, double) { return k >= 2 && k <= last; }));
        };
        if (bound_a_) add(Side::A, *bound_a_, pair_a_.dim());
        if (bound_b_) add(Side::B, *bound_b_, pair_b_.dim());
        detail::finalize(report);
        return report;
    }

    DetectionReport operator()(const ComplexMatrix& rho) const {
        const std::vector<ProbabilityVector> parts = distributions(rho);
        return evaluate(direct_sum(parts));
    }

private:
    ObservablePair pair_a_;
    ObservablePair pair_b_;
    DetectOptions options_;
    Observable product_x_;
    Observable product_z_;
    std::optional<MajorizationBound> bound_a_;
    std::optional<MajorizationBound> bound_b_;
};

/// L product observables X_A^(l) (x) X_B^(l) against the many-observable
/// bounds of each side.
class ManyDetector {
public:
    ManyDetector(std::vector<Observable> obs_a, std::vector<Observable> obs_b, DetectOptions options = {})
        : obs_a_(std::move(obs_a)), obs_b_(std::move(obs_b)), options_(options) {
        if (obs_a_.empty() || obs_a_.size() != obs_b_.size()) {
            throw Error(ErrorCode::DimensionMismatch, "observable lists must be non-empty and of equal length");
        }
        for (const auto* list : {&obs_a_, &obs_b_}) {
            for (const auto& o : *list) {
                if (o.dim() != list->front().dim()) {
                    throw Error(ErrorCode::DimensionMismatch, "observables on one side differ in dimension");
                }
                if (!o.is_rank_one()) throw Error(ErrorCode::NotRankOne, "detector needs rank-one observables");
            }
        }
        for (std::size_t l = 0; l < obs_a_.size(); ++l) {
            products_.push_back(detail::checked_product(obs_a_[l], obs_b_[l], options_.cluster_tol));
        }
        const auto fits = [&](const std::vector<Observable>& o) {
            return o.size() * static_cast<std::size_t>(o.front().dim()) <= options_.limits.max_many_cost;
        };
        if (fits(obs_a_)) bound_a_ = many_bound(obs_a_, options_.limits);
        if (fits(obs_b_)) bound_b_ = many_bound(obs_b_, options_.limits);
        if (!bound_a_ && !bound_b_) {
            throw Error(ErrorCode::DimensionTooLarge, "neither side fits the many-observable enumeration limit");
        }
    }

    const std::vector<Observable>& products() const { return products_; }
    const std::optional<MajorizationBound>& bound_a() const { return bound_a_; }
    const std::optional<MajorizationBound>& bound_b() const { return bound_b_; }
    const DetectOptions& options() const { return options_; }
    std::size_t observable_count() const { return obs_a_.size(); }

    std::vector<ProbabilityVector> distributions(const ComplexMatrix& rho) const {
        detail::require_state_dims(rho, obs_a_.front().dim(), obs_b_.front().dim());
        std::vector<ProbabilityVector> out;
        out.reserve(products_.size());
        for (const auto& p : products_) out.push_back(induced_distribution(p, rho));
        return out;
    }

    DetectionReport evaluate(const ProbabilityVector& direct) const {
        DetectionReport report;
        report.tol = options_.tol;
        report.distribution = direct;
        const auto big_l = static_cast<double>(obs_a_.size());
        const double tol = options_.tol;
        // An inequality is trivial when the bound already equals the most mass
        // any k components can carry, min(k, L).
        const auto effective = [big_l, tol](std::size_t k, double rhs) {
            return rhs < std::min(static_cast<double>(k), big_l) - tol;
        };
        if (bound_a_) report.sides.push_back(detail::compare_side(Side::A, *bound_a_, direct, effective));
        if (bound_b_) report.sides.push_back(detail::compare_side(Side::B, *bound_b_, direct, effective));
        detail::finalize(report);
        return report;
    }

    DetectionReport operator()(const ComplexMatrix& rho) const {
        const std::vector<ProbabilityVector> parts = distributions(rho);
        return evaluate(direct_sum(parts));
    }

private:
    std::vector<Observable> obs_a_;
    std::vector<Observable> obs_b_;
    DetectOptions options_;
    std::vector<Observable> products_;
    std::optional<MajorizationBound> bound_a_;
    std::optional<MajorizationBound> bound_b_;
};

inline DetectionReport detect(const ComplexMatrix& rho, const ObservablePair& pair_a, const ObservablePair& pair_b,
                              const DetectOptions& options = {}) {
    detail::require_state_dims(rho, pair_a.dim(), pair_b.dim());
    return PairDetector(pair_a, pair_b, options)(rho);
}

inline DetectionReport detect_many(const ComplexMatrix& rho, const std::vector<Observable>& obs_a,
                                   const std::vector<Observable>& obs_b, const DetectOptions& options = {}) {
    if (obs_a.empty() || obs_b.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "observable lists must be non-empty");
    }
    detail::require_state_dims(rho, obs_a.front().dim(), obs_b.front().dim());
    return ManyDetector(obs_a, obs_b, options)(rho);
}

// ---------------------------------------------------------------------------
// Parameter scans

struct ScanPoint {
    double parameter;
    DetectionReport report;
};

struct ScanResult {
    std::vector<ScanPoint> points;
    /// Refined boundary between Inconclusive and Entangled; only for
    /// monotone families with a transition inside the grid.
    std::optional<double> threshold;
};

struct ScanOptions {
    /// Bisection stops once the bracket is narrower than this.
    double resolution = 1e-9;
};

using StateDetector = std::function<DetectionReport(const ComplexMatrix&)>;

/// Evenly spaced grid lo, lo + step, ..., including hi when it lands on the grid.
inline std::vector<double> make_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo)) throw Error(ErrorCode::ParameterOutOfRange, "invalid grid: needs step > 0 and hi >= lo");
    std::vector<double> grid;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    for (std::size_t i = 0; i <= count; ++i) grid.push_back(std::min(hi, lo + static_cast<double>(i) * step));
    return grid;
}

inline ScanResult scan(const StateFamily& family, std::span<const double> grid, const StateDetector& detector,
                       const ScanOptions& options = {}) {
    ScanResult result;
    result.points.reserve(grid.size());
    for (double t : grid) result.points.push_back({t, detector(family.generate(t))});
    if (!family.monotone) return result;

    for (std::size_t i = 1; i < result.points.size(); ++i) {
        if (result.points[i - 1].report.verdict == Verdict::Inconclusive &&
            result.points[i].report.verdict == Verdict::Entangled) {
            double lo = result.points[i - 1].parameter;
            double hi = result.points[i].parameter;
            while (hi - lo > options.resolution) {
                const double mid = 0.5 * (lo + hi);
                if (detector(family.generate(mid)).verdict == Verdict::Entangled) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            result.threshold = 0.5 * (lo + hi);
            break;
        }
    }
    return result;
}

}  // namespace majorant
