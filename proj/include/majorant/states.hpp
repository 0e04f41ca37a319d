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

// Preset states, observables and random corpora.
//
// Bipartite basis ordering is big-endian: |i j> has index i * dB + j.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "majorant/error.hpp"
#include "majorant/numerics.hpp"
#include "majorant/observables.hpp"
#include "majorant/random.hpp"

namespace majorant {

inline ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

inline ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

inline ComplexMatrix maximally_mixed(Eigen::Index d) {
    return ComplexMatrix::Identity(d, d) / static_cast<double>(d);
}

/// (|00> + |11> + ... ) / sqrt(d) on d x d.
inline ComplexVector max_entangled_vector(Eigen::Index d) {
    ComplexVector v = ComplexVector::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) v[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
    return v;
}

inline ComplexMatrix bell() { return outer(max_entangled_vector(2)); }

inline ComplexMatrix werner(double w) {
    if (!(w >= 0.0 && w <= 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "Werner weight must lie in [0, 1]");
    }
    return w * bell() + (1.0 - w) * maximally_mixed(4);
}

/// f |Phi+_d><Phi+_d| + (1 - f) (I - |Phi+_d><Phi+_d|) / (d^2 - 1).
inline ComplexMatrix isotropic(Eigen::Index d, double f) {
    if (d < 2) throw Error(ErrorCode::ParameterOutOfRange, "isotropic state needs d >= 2");
    if (!(f >= 0.0 && f <= 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "isotropic fidelity must lie in [0, 1]");
    }
    const ComplexMatrix phi = outer(max_entangled_vector(d));
    const Eigen::Index n = d * d;
    return f * phi + (1.0 - f) * (ComplexMatrix::Identity(n, n) - phi) / static_cast<double>(n - 1);
}

/// Werner weight equivalent to isotropic fidelity f: the two families share
/// the form w |Phi+><Phi+| + (1 - w) I / d^2 with w = (d^2 f - 1) / (d^2 - 1).
inline double isotropic_to_werner_weight(Eigen::Index d, double f) {
    const auto n = static_cast<double>(d * d);
    return (n * f - 1.0) / (n - 1.0);
}

/// |0...0><0...0| on dA x dB.
inline ComplexMatrix product_ground(Eigen::Index da, Eigen::Index db) {
    ComplexMatrix rho = ComplexMatrix::Zero(da * db, da * db);
    rho(0, 0) = 1.0;
    return rho;
}

inline ComplexMatrix computational_basis(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

/// Columns are the discrete Fourier basis vectors.
inline ComplexMatrix fourier_basis(Eigen::Index d) {
    ComplexMatrix f(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index k = 0; k < d; ++k)
            f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(d));
    return f;
}

/// Spectrum d, d-1, ..., 1 used by the basis presets. Strictly positive, so
/// products with another factor never merge outcomes that share an index.
inline std::vector<double> default_spectrum(Eigen::Index d) {
    std::vector<double> s(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) s[static_cast<std::size_t>(i)] = static_cast<double>(d - i);
    return s;
}

/// sum_i spectrum[i] |b_i><b_i| for the columns b_i of `basis`.
inline ComplexMatrix basis_operator(const ComplexMatrix& basis, const std::vector<double>& spectrum) {
    if (static_cast<Eigen::Index>(spectrum.size()) != basis.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "spectrum length differs from basis size");
    }
    ComplexMatrix m = ComplexMatrix::Zero(basis.rows(), basis.rows());
    for (Eigen::Index i = 0; i < basis.cols(); ++i) m += spectrum[static_cast<std::size_t>(i)] * outer(basis.col(i));
    return 0.5 * (m + m.adjoint());
}

inline Observable basis_observable(const ComplexMatrix& basis, const std::vector<double>& spectrum) {
    return decompose(basis_operator(basis, spectrum));
}

inline Observable basis_observable(const ComplexMatrix& basis) {
    return basis_observable(basis, default_spectrum(basis.cols()));
}

/// X = sigma_z, Z = sigma_x.
inline ObservablePair pauli_pair() { return {decompose(pauli_z()), decompose(pauli_x())}; }

/// X = computational basis, Z = discrete Fourier basis.
inline ObservablePair fourier_pair(Eigen::Index d) {
    if (d < 2) throw Error(ErrorCode::ParameterOutOfRange, "fourier pair needs d >= 2");
    return {basis_observable(computational_basis(d)), basis_observable(fourier_basis(d))};
}

/// Side-B partner of fourier_pair(d): conjugate bases, reciprocal spectrum.
/// Each outcome pair (i, i) then has product eigenvalue 1, so |Phi+_d> is a
/// joint eigenstate of both product observables. Overlap magnitudes, and so
/// the bound, equal those of fourier_pair(d).
inline ObservablePair fourier_partner_pair(Eigen::Index d) {
    if (d < 2) throw Error(ErrorCode::ParameterOutOfRange, "fourier pair needs d >= 2");
    std::vector<double> recip = default_spectrum(d);
    for (double& x : recip) x = 1.0 / x;
    return {basis_observable(computational_basis(d), recip),
            basis_observable(ComplexMatrix(fourier_basis(d).conjugate()), recip)};
}

/// The three qubit Pauli eigenbases, as sigma_x, sigma_y, sigma_z.
inline std::vector<Observable> mub_triple() {
    return {decompose(pauli_x()), decompose(pauli_y()), decompose(pauli_z())};
}

// ---------------------------------------------------------------------------
// Random corpora

inline ComplexMatrix haar_pure(Eigen::Index d, Rng& rng) {
    if (d < 2) throw Error(ErrorCode::ParameterOutOfRange, "dimension must be at least 2");
    return outer(haar_vector(d, rng));
}

inline ComplexMatrix haar_pure(Eigen::Index d, std::uint64_t seed) {
    Rng rng(seed);
    return haar_pure(d, rng);
}

/// Flat-Dirichlet spectrum in a Haar-random eigenbasis.
inline ComplexMatrix random_mixed(Eigen::Index d, Rng& rng) {
    if (d < 2) throw Error(ErrorCode::ParameterOutOfRange, "dimension must be at least 2");
    const ComplexMatrix u = haar_unitary(d, rng);
    const std::vector<double> w = dirichlet_uniform(static_cast<std::size_t>(d), rng);
    ComplexMatrix rho = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) rho += w[static_cast<std::size_t>(i)] * outer(u.col(i));
    return 0.5 * (rho + rho.adjoint());
}

/// Pure product |a><a| (x) |b><b| with Haar-random factors.
inline ComplexMatrix random_product(Eigen::Index da, Eigen::Index db, Rng& rng) {
    if (da < 2 || db < 2) throw Error(ErrorCode::ParameterOutOfRange, "dimensions must be at least 2");
    const ComplexVector a = haar_vector(da, rng);
    const ComplexVector b = haar_vector(db, rng);
    return outer(kron_vector(a, b));
}

inline ComplexMatrix random_product(Eigen::Index da, Eigen::Index db, std::uint64_t seed) {
    Rng rng(seed);
    return random_product(da, db, rng);
}

/// Convex mixture of `terms` pure product states with flat-Dirichlet weights.
/// The product terms are drawn first, so terms == 1 reproduces random_product
/// for the same seed.
inline ComplexMatrix random_separable(Eigen::Index da, Eigen::Index db, std::size_t terms, Rng& rng) {
    if (terms < 1) throw Error(ErrorCode::ParameterOutOfRange, "need at least one term");
    std::vector<ComplexMatrix> parts;
    parts.reserve(terms);
    for (std::size_t t = 0; t < terms; ++t) parts.push_back(random_product(da, db, rng));
    if (terms == 1) return parts.front();
    const std::vector<double> w = dirichlet_uniform(terms, rng);
    ComplexMatrix rho = ComplexMatrix::Zero(da * db, da * db);
    for (std::size_t t = 0; t < terms; ++t) rho += w[t] * parts[t];
    return 0.5 * (rho + rho.adjoint());
}

inline ComplexMatrix random_separable(Eigen::Index da, Eigen::Index db, std::size_t terms, std::uint64_t seed) {
    Rng rng(seed);
    return random_separable(da, db, terms, rng);
}

/// Haar-random measurement basis with distinct non-zero eigenvalues.
///
/// With `integer_spectrum` the eigenvalues are a random signed selection of
/// 1..d, which makes products with another such observable degenerate often;
/// otherwise they are drawn from +-[0.5, 2].
inline Observable random_rank_one_observable(Eigen::Index d, Rng& rng, bool integer_spectrum = false) {
    const ComplexMatrix u = haar_unitary(d, rng);
    std::vector<double> spectrum(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) {
        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        const double mag = integer_spectrum ? static_cast<double>(i + 1) : 0.5 + 1.5 * rng.uniform();
        spectrum[static_cast<std::size_t>(i)] = sign * mag;
    }
    if (!integer_spectrum) {
        // Reject accidental near-degeneracy.
        for (std::size_t i = 0; i < spectrum.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (std::abs(spectrum[i] - spectrum[j]) < 1e-3) return random_rank_one_observable(d, rng, false);
    }
    return basis_observable(u, spectrum);
}

inline ObservablePair random_rank_one_pair(Eigen::Index d, Rng& rng, bool integer_spectrum = false) {
    Observable x = random_rank_one_observable(d, rng, integer_spectrum);
    Observable z = random_rank_one_observable(d, rng, integer_spectrum);
    return {std::move(x), std::move(z)};
}

// ---------------------------------------------------------------------------
// Families for scans

struct StateFamily {
    std::string name;
    Eigen::Index dim_a = 2;
    Eigen::Index dim_b = 2;
    double lo = 0.0;
    double hi = 1.0;
    /// Entanglement (and any detection margin) is non-decreasing in the parameter.
    bool monotone = false;
    std::function<ComplexMatrix(double)> generate;
};

inline StateFamily werner_family() {
    return {"werner", 2, 2, 0.0, 1.0, true, [](double w) { return werner(w); }};
}

inline StateFamily isotropic_family(Eigen::Index d) {
    return {"isotropic", d, d, 0.0, 1.0, true, [d](double f) { return isotropic(d, f); }};
}

/// t |00><00| + (1 - t) |f0 f0><f0 f0| with f0 the first Fourier vector:
/// separable for every t.
inline StateFamily separable_mix_family(Eigen::Index d) {
    return {"separable-mix", d, d, 0.0, 1.0, false, [d](double t) {
                if (!(t >= 0.0 && t <= 1.0)) {
                    throw Error(ErrorCode::ParameterOutOfRange, "mixing parameter must lie in [0, 1]");
                }
                const ComplexVector f0 = fourier_basis(d).col(0);
                return ComplexMatrix(t * product_ground(d, d) + (1.0 - t) * outer(kron_vector(f0, f0)));
            }};
}

}  // namespace majorant
