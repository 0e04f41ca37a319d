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

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "majorant/bounds.hpp"
#include "majorant/states.hpp"
#include "support/oracles.hpp"

using namespace majorant;

namespace {

const double kR2 = 1.0 / std::sqrt(2.0);

void expect_state(const ComplexMatrix& rho) {
    EXPECT_NO_THROW(validate_state(rho));
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-9);
    EXPECT_GE(hermitian_eigenvalues(rho).minCoeff(), -1e-9);
}

}  // namespace

TEST(bell, examples) {
    const ComplexMatrix b = bell();
    EXPECT_NEAR(b.trace().real(), 1.0, 1e-15);
    const ProbabilityVector p = induced_distribution(decompose(kron(pauli_z(), pauli_z())), b);
    EXPECT_NEAR(p[0], 1.0, 1e-12);
    EXPECT_NEAR(p[1], 0.0, 1e-12);
    const RealVector pt = hermitian_eigenvalues(oracle::partial_transpose_b(b, 2, 2));
    EXPECT_NEAR(pt[pt.size() - 1], -0.5, 1e-12);
}

TEST(werner, examples) {
    EXPECT_LE(max_abs_entry(werner(0.0) - maximally_mixed(4)), 1e-15);
    EXPECT_LE(max_abs_entry(werner(1.0) - bell()), 1e-15);
    const RealVector ev = hermitian_eigenvalues(werner(0.5));
    EXPECT_NEAR(ev[0], 0.625, 1e-12);
    for (Eigen::Index i = 1; i < 4; ++i) EXPECT_NEAR(ev[i], 0.125, 1e-12);
    try {
        werner(1.5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParameterOutOfRange);
    }
    EXPECT_THROW(werner(-0.1), Error);
}

TEST(werner, positive_partial_transpose_up_to_one_third) {
    for (double w = 0.0; w <= 1.0 / 3.0 + 1e-12; w += 1.0 / 30.0) {
        EXPECT_GE(hermitian_eigenvalues(oracle::partial_transpose_b(werner(w), 2, 2)).minCoeff(), -1e-12);
    }
    EXPECT_LT(hermitian_eigenvalues(oracle::partial_transpose_b(werner(0.34), 2, 2)).minCoeff(), 0.0);
}

TEST(isotropic, matches_werner_at_two_qubits) {
    for (double f = 0.0; f <= 1.0; f += 0.125) {
        const ComplexMatrix iso = isotropic(2, f);
        expect_state(iso);
        const double w = isotropic_to_werner_weight(2, f);
        if (w >= 0.0) {
            EXPECT_LE(max_abs_entry(iso - werner(w)), 1e-12);
        }
    }
    EXPECT_NEAR(isotropic(3, 1.0)(0, 0).real(), 1.0 / 3.0, 1e-15);
    EXPECT_THROW(isotropic(1, 0.5), Error);
    EXPECT_THROW(isotropic(2, 1.5), Error);
}

TEST(presets, overlap_magnitudes) {
    EXPECT_LE((overlap_matrix(pauli_pair()).magnitudes().array() - kR2).abs().maxCoeff(), 1e-12);
    EXPECT_LE((overlap_matrix(fourier_pair(3)).magnitudes().array() - 1.0 / std::sqrt(3.0)).abs().maxCoeff(), 1e-12);
    const std::vector<Observable> mub = mub_triple();
    for (std::size_t a = 0; a < mub.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            EXPECT_LE((overlap_matrix({mub[a], mub[b]}).magnitudes().array() - kR2).abs().maxCoeff(), 1e-12);
    EXPECT_THROW(fourier_pair(1), Error);
}

TEST(presets, basis_spectra_have_no_zero_eigenvalue) {
    for (Eigen::Index d = 2; d <= 6; ++d) {
        const ObservablePair p = fourier_pair(d);
        EXPECT_TRUE(p.x.is_rank_one());
        EXPECT_TRUE(p.z.is_rank_one());
        for (double e : p.x.eigenvalues()) EXPECT_GE(std::abs(e), 1.0);
    }
}

TEST(haar_pure, is_pure_and_seeded) {
    for (Eigen::Index d = 2; d <= 5; ++d) {
        const ComplexMatrix rho = haar_pure(d, 17u);
        expect_state(rho);
        EXPECT_NEAR((rho * rho).trace().real(), 1.0, 1e-10);
        EXPECT_EQ(max_abs_entry(rho - haar_pure(d, 17u)), 0.0);
    }
    EXPECT_THROW(haar_pure(1, 1u), Error);
}

TEST(random_product, factorizes) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Eigen::Index da = 2 + static_cast<Eigen::Index>(seed % 3);
        const Eigen::Index db = 2 + static_cast<Eigen::Index>((seed / 3) % 3);
        const ComplexMatrix rho = random_product(da, db, seed);
        expect_state(rho);
        const ComplexMatrix back = kron(partial_trace_b(rho, da, db), partial_trace_a(rho, da, db));
        EXPECT_LE(max_abs_entry(rho - back), 1e-10);
    }
}

TEST(random_separable, single_term_is_random_product) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EXPECT_EQ(max_abs_entry(random_separable(2, 3, 1, seed) - random_product(2, 3, seed)), 0.0);
    }
    EXPECT_THROW(random_separable(2, 2, 0, 1u), Error);
}

TEST(random_separable, valid_and_positive_partial_transpose) {
    Rng rng(191);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t terms = 1 + rng.below(6);
        const ComplexMatrix rho = random_separable(2, 2, terms, rng);
        expect_state(rho);
        EXPECT_GE(hermitian_eigenvalues(oracle::partial_transpose_b(rho, 2, 2)).minCoeff(), -1e-10);
    }
}

TEST(random_mixed, valid_and_seeded) {
    Rng a(193), b(193);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix x = random_mixed(3, a);
        expect_state(x);
        EXPECT_EQ(max_abs_entry(x - random_mixed(3, b)), 0.0);
    }
}

TEST(families, emit_valid_states) {
    for (const StateFamily& f : {werner_family(), isotropic_family(2), isotropic_family(3), separable_mix_family(3)}) {
        for (double t = f.lo; t <= f.hi + 1e-12; t += 0.1) {
            const ComplexMatrix rho = f.generate(std::min(t, f.hi));
            EXPECT_EQ(rho.rows(), f.dim_a * f.dim_b);
            expect_state(rho);
        }
    }
    EXPECT_TRUE(werner_family().monotone);
    EXPECT_FALSE(separable_mix_family(2).monotone);
}

TEST(fourier_partner_pair, correlates_with_fourier_pair_on_max_entangled) {
    for (Eigen::Index d = 2; d <= 4; ++d) {
        const ObservablePair a = fourier_pair(d);
        const ObservablePair b = fourier_partner_pair(d);
        EXPECT_LE((overlap_matrix(a).magnitudes() - overlap_matrix(b).magnitudes()).cwiseAbs().maxCoeff(), 1e-12);
        const ComplexMatrix phi = isotropic(d, 1.0);
        for (const auto& [x, y] : {std::pair{a.x, b.x}, std::pair{a.z, b.z}}) {
            const ProbabilityVector p = induced_distribution(product_observable(x, y), phi);
            EXPECT_NEAR(*std::max_element(p.values().begin(), p.values().end()), 1.0, 1e-10);
        }
    }
    EXPECT_THROW(fourier_partner_pair(1), Error);
}
