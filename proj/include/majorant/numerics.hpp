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

// Dense complex kernel. Everything in this library works with small
// (d <= 64) matrices, so we lean on Eigen's dense solvers and keep the
// surface to the handful of operations the rest of the code needs.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include <Eigen/Dense>

#include "majorant/error.hpp"

namespace majorant {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerance on |a - a^dagger| used by every Hermiticity check.
inline constexpr double kHermitianTol = 1e-10;

struct HermitianEigensystem {
    RealVector eigenvalues;      // descending
    ComplexMatrix eigenvectors;  // column j belongs to eigenvalues[j]
};

inline bool all_finite(const ComplexMatrix& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const Complex z = m.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

inline void require_finite(const ComplexMatrix& m, const char* what = "matrix") {
    if (m.size() == 0) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " is empty");
    if (!all_finite(m)) throw Error(ErrorCode::NonFinite, std::string(what) + " has NaN or Inf entries");
}

inline double max_abs_entry(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol) {
    return a.rows() == a.cols() && max_abs_entry(a - a.adjoint()) <= tol;
}

inline void require_hermitian(const ComplexMatrix& a, const char* what = "matrix") {
    require_finite(a, what);
    if (a.rows() != a.cols()) {
        throw Error(ErrorCode::NotHermitian, std::string(what) + " is not square");
    }
    const double asym = max_abs_entry(a - a.adjoint());
    if (asym > kHermitianTol) {
        throw Error(ErrorCode::NotHermitian,
                    std::string(what) + " deviates from its adjoint by " + std::to_string(asym));
    }
}

inline HermitianEigensystem hermitian_eig(const ComplexMatrix& a) {
    require_hermitian(a);
    // Symmetrize so the solver sees an exactly Hermitian input.
    const ComplexMatrix h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    const Eigen::Index n = h.rows();
    HermitianEigensystem out{RealVector(n), ComplexMatrix(n, n)};
    // Eigen returns ascending order.
    for (Eigen::Index j = 0; j < n; ++j) {
        out.eigenvalues[j] = solver.eigenvalues()[n - 1 - j];
        out.eigenvectors.col(j) = solver.eigenvectors().col(n - 1 - j);
    }
    return out;
}

inline RealVector hermitian_eigenvalues(const ComplexMatrix& a) {
    require_hermitian(a);
    const ComplexMatrix h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    RealVector ev = solver.eigenvalues().reverse();
    return ev;
}

/// Largest singular value.
inline double operator_norm(const ComplexMatrix& m) {
    require_finite(m);
    if (m.rows() == 1 || m.cols() == 1) return m.norm();
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()[0];
}

inline double max_eigenvalue(const ComplexMatrix& a) {
    return hermitian_eigenvalues(a)[0];
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_finite(a, "left factor");
    require_finite(b, "right factor");
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline ComplexVector kron_vector(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
    return out;
}

inline ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

/// Trace over the second factor of a (dA*dB) x (dA*dB) operator.
inline ComplexMatrix partial_trace_b(const ComplexMatrix& rho, Eigen::Index da, Eigen::Index db) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j)
            for (Eigen::Index k = 0; k < db; ++k) out(i, j) += rho(i * db + k, j * db + k);
    return out;
}

/// Trace over the first factor.
inline ComplexMatrix partial_trace_a(const ComplexMatrix& rho, Eigen::Index da, Eigen::Index db) {
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (Eigen::Index i = 0; i < db; ++i)
        for (Eigen::Index j = 0; j < db; ++j)
            for (Eigen::Index k = 0; k < da; ++k) out(i, j) += rho(k * db + i, k * db + j);
    return out;
}

}  // namespace majorant
