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
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "majorant/numerics.hpp"

namespace majorant {

/// Seedable generator with a bit-identical stream on every platform.
///
/// std::mt19937_64's output sequence is fixed by the standard, but the
/// standard distributions are not, so uniforms and normals are derived here
/// directly from the raw 64-bit words.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1].
    double uniform_open0() { return 1.0 - uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection keeps the draw unbiased.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % n;
    }

    /// Standard normal via Box-Muller; the spare value is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_open0()));
        const double theta = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    /// Real and imaginary parts independent N(0, 1/2).
    Complex complex_normal() {
        const double s = std::sqrt(0.5);
        const double re = normal();
        const double im = normal();
        return {s * re, s * im};
    }

    /// Derive an independent child stream, e.g. one per restart.
    Rng split() { return Rng(engine_() ^ 0x9E3779B97F4A7C15ULL); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Haar-random unit vector.
inline ComplexVector haar_vector(Eigen::Index d, Rng& rng) {
    ComplexVector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v[i] = rng.complex_normal();
    return v / v.norm();
}

/// Haar-random unitary from the QR decomposition of a Ginibre matrix, with
/// the diagonal phases of R absorbed so the distribution is exactly Haar.
inline ComplexMatrix haar_unitary(Eigen::Index d, Rng& rng) {
    ComplexMatrix g(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i) g(i, j) = rng.complex_normal();
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < d; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) q.col(j) *= r(j, j) / mag;
    }
    return q;
}

/// Uniform point on the probability simplex (flat Dirichlet).
inline std::vector<double> dirichlet_uniform(std::size_t n, Rng& rng) {
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w) {
        x = -std::log(rng.uniform_open0());
        total += x;
    }
    for (auto& x : w) x /= total;
    return w;
}

}  // namespace majorant
