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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "majorant/detector.hpp"
#include "majorant/states.hpp"

using namespace majorant;

namespace {

const double kR2 = 1.0 / std::sqrt(2.0);

const PrefixCheck& check_at(const DetectionReport& r, Side side, std::size_t k) {
    for (const auto& s : r.sides)
        if (s.side == side) return s.checks.at(k - 1);
    throw std::logic_error("side not tested");
}

std::vector<Observable> flipped_mub_triple() {
    return {decompose(pauli_x()), decompose(ComplexMatrix(-pauli_y())), decompose(pauli_z())};
}

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::Parse;
}

}  // namespace

TEST(detect, bell_is_entangled_at_k2) {
    const DetectionReport r = detect(bell(), pauli_pair(), pauli_pair());
    EXPECT_EQ(r.verdict, Verdict::Entangled);
    EXPECT_EQ(r.sides_tested(), "both");
    const PrefixCheck& c = check_at(r, Side::A, 2);
    EXPECT_NEAR(c.lhs, 2.0, 1e-12);
    EXPECT_NEAR(c.rhs, 1.0 + kR2, 1e-12);
    EXPECT_NEAR(c.margin, 1.0 - kR2, 1e-9);
    EXPECT_TRUE(c.effective);
    ASSERT_TRUE(r.worst().has_value());
    EXPECT_EQ(r.worst()->k, 2u);
    for (const auto& v : r.violations) EXPECT_EQ(v.k, 2u);
}

TEST(detect, product_state_is_inconclusive) {
    const DetectionReport r = detect(product_ground(2, 2), pauli_pair(), pauli_pair());
    EXPECT_EQ(r.verdict, Verdict::Inconclusive);
    EXPECT_TRUE(r.violations.empty());
}

TEST(detect, werner_examples) {
    EXPECT_EQ(detect(werner(0.5), pauli_pair(), pauli_pair()).verdict, Verdict::Inconclusive);
    const DetectionReport r = detect(werner(0.8), pauli_pair(), pauli_pair());
    EXPECT_EQ(r.verdict, Verdict::Entangled);
    // Direct sum ((1+w)/2, (1+w)/2, (1-w)/2, (1-w)/2): k=2 reads 1 + w.
    EXPECT_NEAR(check_at(r, Side::A, 2).lhs, 1.8, 1e-12);
    for (double w = 0.0; w <= 1.0 / 3.0; w += 1.0 / 60.0) {
        EXPECT_EQ(detect(werner(w), pauli_pair(), pauli_pair()).verdict, Verdict::Inconclusive) << w;
    }
}

TEST(detect, effective_range_and_completeness) {
    const DetectionReport r = detect(isotropic(3, 0.3), fourier_pair(3), fourier_pair(3));
    ASSERT_EQ(r.sides.size(), 2u);
    for (const auto& s : r.sides) {
        EXPECT_EQ(s.effective_first, 2u);
        EXPECT_EQ(s.effective_last, 3u);
        ASSERT_EQ(s.checks.size(), std::max(s.bound.size(), r.distribution.size()));
        for (std::size_t k = 1; k <= s.checks.size(); ++k) {
            EXPECT_EQ(s.checks[k - 1].k, k);
            EXPECT_EQ(s.checks[k - 1].effective, k >= 2 && k <= 3);
        }
    }
}

TEST(detect, errors) {
    EXPECT_EQ(code_of([] { detect(maximally_mixed(3), pauli_pair(), pauli_pair()); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([] { detect(ComplexMatrix::Identity(4, 4), pauli_pair(), pauli_pair()); }),
              ErrorCode::InvalidState);
    const ObservablePair degenerate{decompose(ComplexMatrix::Identity(2, 2)), decompose(pauli_x())};
    EXPECT_EQ(code_of([&] { detect(bell(), degenerate, pauli_pair()); }), ErrorCode::NotRankOne);
    // A zero eigenvalue lets the product merge outcomes that share an index.
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    const ObservablePair with_zero{decompose(p0), decompose(pauli_x())};
    EXPECT_EQ(code_of([&] { detect(bell(), with_zero, with_zero); }), ErrorCode::DegenerateProduct);
}

TEST(detect, borderline_margin_is_not_claimed) {
    const PairDetector det(pauli_pair(), pauli_pair());
    const double eps = 5e-10;
    const ProbabilityVector direct({1.0, kR2 + eps, 1.0 - kR2 - eps, 0.0}, 2.0);
    const DetectionReport r = det.evaluate(direct);
    EXPECT_EQ(r.verdict, Verdict::Inconclusive);
    EXPECT_TRUE(r.borderline);
    EXPECT_NEAR(r.worst()->margin, eps, 1e-15);

    const ProbabilityVector clear({1.0, kR2 + 1e-6, 1.0 - kR2 - 1e-6, 0.0}, 2.0);
    EXPECT_EQ(det.evaluate(clear).verdict, Verdict::Entangled);
    EXPECT_FALSE(det.evaluate(clear).borderline);
}

TEST(detect, direct_sum_has_total_two) {
    Rng rng(131);
    const PairDetector det(fourier_pair(3), random_rank_one_pair(2, rng));
    for (int rep = 0; rep < 30; ++rep) {
        const DetectionReport r = det(random_mixed(6, rng));
        EXPECT_NEAR(r.distribution.total(), 2.0, 1e-9);
        double sum = 0.0;
        for (double x : r.distribution.values()) sum += x;
        EXPECT_NEAR(sum, 2.0, 1e-9);
    }
}

TEST(detect, symmetric_states_give_equal_sides) {
    Rng rng(137);
    for (int rep = 0; rep < 30; ++rep) {
        const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.below(2));
        const ObservablePair pair = random_rank_one_pair(d, rng);
        const double f = rng.uniform();
        const DetectionReport r = detect(isotropic(d, f), pair, pair);
        ASSERT_EQ(r.sides.size(), 2u);
        for (std::size_t k = 0; k < r.sides[0].checks.size(); ++k) {
            EXPECT_NEAR(r.sides[0].checks[k].margin, r.sides[1].checks[k].margin, 1e-9);
        }
    }
}

TEST(detect, separable_states_are_never_flagged) {
    Rng rng(139);
    int flagged = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.below(2));
        const std::size_t terms = 1 + rng.below(static_cast<std::uint64_t>(d * d));
        const ComplexMatrix rho = random_separable(d, d, terms, rng);
        const bool integer = rep % 4 == 0;
        const ObservablePair a = random_rank_one_pair(d, rng, integer);
        const ObservablePair b = random_rank_one_pair(d, rng, integer);
        const DetectionReport r = detect(rho, a, b);
        if (r.verdict == Verdict::Entangled) ++flagged;
    }
    EXPECT_EQ(flagged, 0);
}

TEST(detect_many, bell_with_three_mubs) {
    const DetectionReport r = detect_many(bell(), mub_triple(), flipped_mub_triple());
    EXPECT_EQ(r.verdict, Verdict::Entangled);
    EXPECT_NEAR(r.distribution.total(), 3.0, 1e-9);
    const PrefixCheck& c = check_at(r, Side::A, 2);
    EXPECT_NEAR(c.lhs, 2.0, 1e-12);
    EXPECT_NEAR(c.rhs, 1.0 + kR2, 1e-10);
    EXPECT_TRUE(c.effective);
    EXPECT_FALSE(check_at(r, Side::A, 1).effective);
}

TEST(detect_many, maximally_mixed_is_inconclusive) {
    Rng rng(149);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Observable> a, b;
        const std::size_t big_l = 1 + rng.below(3);
        for (std::size_t l = 0; l < big_l; ++l) {
            a.push_back(random_rank_one_observable(2, rng));
            b.push_back(random_rank_one_observable(2, rng));
        }
        EXPECT_EQ(detect_many(maximally_mixed(4), a, b).verdict, Verdict::Inconclusive);
    }
}

TEST(detect_many, two_observables_reduce_to_detect) {
    Rng rng(151);
    for (int rep = 0; rep < 200; ++rep) {
        const ObservablePair a = random_rank_one_pair(2, rng);
        const ObservablePair b = random_rank_one_pair(2, rng);
        const ComplexMatrix rho = rep % 2 == 0 ? haar_pure(4, rng) : random_mixed(4, rng);
        const DetectionReport two = detect(rho, a, b);
        const DetectionReport many = detect_many(rho, {a.x, a.z}, {b.x, b.z});
        EXPECT_EQ(two.verdict, many.verdict);
        ASSERT_EQ(two.sides.size(), many.sides.size());
        for (std::size_t s = 0; s < two.sides.size(); ++s) {
            ASSERT_EQ(two.sides[s].checks.size(), many.sides[s].checks.size());
            for (std::size_t k = 0; k < two.sides[s].checks.size(); ++k) {
                EXPECT_NEAR(two.sides[s].checks[k].margin, many.sides[s].checks[k].margin, 1e-9);
            }
        }
    }
}

TEST(detect_many, errors) {
    EXPECT_EQ(code_of([] { detect_many(bell(), mub_triple(), {decompose(pauli_z())}); }),
              ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([] { detect_many(bell(), {}, {}); }), ErrorCode::DimensionMismatch);
}

TEST(make_grid, examples) {
    const std::vector<double> g = make_grid(0.0, 1.0, 0.25);
    ASSERT_EQ(g.size(), 5u);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_EQ(make_grid(0.0, 1.0, 0.01).size(), 101u);
    EXPECT_THROW(make_grid(0.0, 1.0, 0.0), Error);
    EXPECT_THROW(make_grid(1.0, 0.0, 0.1), Error);
}

TEST(scan, werner_threshold) {
    const PairDetector det(pauli_pair(), pauli_pair());
    const std::vector<double> grid = make_grid(0.0, 1.0, 0.01);
    const ScanResult r = scan(werner_family(), grid, [&](const ComplexMatrix& rho) { return det(rho); });
    ASSERT_EQ(r.points.size(), grid.size());
    ASSERT_TRUE(r.threshold.has_value());
    EXPECT_NEAR(*r.threshold, kR2, 1e-6);
    for (const auto& p : r.points) {
        const Verdict want = p.parameter < kR2 ? Verdict::Inconclusive : Verdict::Entangled;
        EXPECT_EQ(p.report.verdict, want) << p.parameter;
    }
}

TEST(scan, isotropic_two_qubits_matches_werner) {
    const PairDetector det(pauli_pair(), pauli_pair());
    const std::vector<double> grid = make_grid(0.0, 1.0, 0.01);
    const ScanResult r = scan(isotropic_family(2), grid, [&](const ComplexMatrix& rho) { return det(rho); });
    ASSERT_TRUE(r.threshold.has_value());
    EXPECT_NEAR(*r.threshold, (1.0 + 3.0 * kR2) / 4.0, 1e-6);
    EXPECT_NEAR(isotropic_to_werner_weight(2, *r.threshold), kR2, 1e-6);
}

TEST(scan, separable_mix_has_no_detections) {
    for (Eigen::Index d = 2; d <= 3; ++d) {
        const PairDetector det(fourier_pair(d), fourier_pair(d));
        const ScanResult r = scan(separable_mix_family(d), make_grid(0.0, 1.0, 0.05),
                                  [&](const ComplexMatrix& rho) { return det(rho); });
        EXPECT_FALSE(r.threshold.has_value());
        for (const auto& p : r.points) EXPECT_EQ(p.report.verdict, Verdict::Inconclusive);
    }
}
