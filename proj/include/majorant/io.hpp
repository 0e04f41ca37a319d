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

// JSON documents for states, observables, bounds and detection reports.
//
//   state:      {"dims": [dA, dB] | [d], "matrix": [[[re, im], ...], ...]}
//   observable: {"preset": name, "dim": d [, "spectrum": [...]]} | {"matrix": ...}
//
// Matrices are row-major; complex entries are [re, im] pairs. Doubles are
// written with the shortest representation that round-trips exactly.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "majorant/bounds.hpp"
#include "majorant/detector.hpp"
#include "majorant/error.hpp"
#include "majorant/numerics.hpp"
#include "majorant/observables.hpp"
#include "majorant/states.hpp"

namespace majorant::io {

using Json = nlohmann::json;

inline Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ComplexMatrix matrix_from_json(const Json& j, const std::string& field = "matrix") {
    if (!j.is_array() || j.empty()) throw Error(ErrorCode::Parse, "field '" + field + "' must be a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) throw Error(ErrorCode::Parse, "field '" + field + "[0]' must be a non-empty array");
    const std::size_t cols = j[0].size();
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string row_name = field + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != cols) {
            throw Error(ErrorCode::Parse, "field '" + row_name + "' must have " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& e = j[r][c];
            const std::string name = row_name + "[" + std::to_string(c) + "]";
            if (e.is_number()) {
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = e.get<double>();
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {e[0].get<double>(), e[1].get<double>()};
            } else {
                throw Error(ErrorCode::Parse, "field '" + name + "' must be a number or an [re, im] pair");
            }
        }
    }
    if (!all_finite(m)) throw Error(ErrorCode::Parse, "field '" + field + "' has non-finite entries");
    return m;
}

struct StateFile {
    std::vector<Eigen::Index> dims;
    ComplexMatrix matrix;

    Eigen::Index dim_a() const { return dims.front(); }
    Eigen::Index dim_b() const { return dims.size() == 2 ? dims[1] : 1; }
};

inline StateFile parse_state(const Json& j) {
    if (!j.is_object()) throw Error(ErrorCode::Parse, "state document must be a JSON object");
    if (!j.contains("matrix")) throw Error(ErrorCode::Parse, "state is missing field 'matrix'");
    StateFile out;
    out.matrix = matrix_from_json(j.at("matrix"), "matrix");
    if (j.contains("dims")) {
        const Json& dims = j.at("dims");
        if (!dims.is_array() || dims.empty() || dims.size() > 2) {
            throw Error(ErrorCode::Parse, "field 'dims' must be [d] or [dA, dB]");
        }
        Eigen::Index prod = 1;
        for (const Json& d : dims) {
            if (!d.is_number_integer() || d.get<long long>() < 1) {
                throw Error(ErrorCode::Parse, "field 'dims' must hold positive integers");
            }
            out.dims.push_back(static_cast<Eigen::Index>(d.get<long long>()));
            prod *= out.dims.back();
        }
        if (prod != out.matrix.rows()) throw Error(ErrorCode::Parse, "field 'dims' does not match the matrix size");
    } else {
        out.dims = {out.matrix.rows()};
    }
    try {
        validate_state(out.matrix);
    } catch (const Error& e) {
        throw Error(ErrorCode::Parse, std::string("field 'matrix': ") + e.what());
    }
    return out;
}

inline Json state_to_json(const ComplexMatrix& rho, const std::vector<Eigen::Index>& dims) {
    Json d = Json::array();
    for (Eigen::Index x : dims) d.push_back(x);
    return Json{{"dims", d}, {"matrix", matrix_to_json(rho)}};
}

/// Named single-system operator: sigma_x, sigma_y, sigma_z, computational,
/// fourier (the last two take a dimension and an optional spectrum).
inline ComplexMatrix preset_operator(const std::string& name, Eigen::Index dim,
                                     const std::vector<double>& spectrum = {}) {
    if (name == "sigma_x" || name == "sigma_y" || name == "sigma_z") {
        if (dim != 2) throw Error(ErrorCode::Parse, "preset '" + name + "' only exists for dim 2");
        if (name == "sigma_x") return pauli_x();
        return name == "sigma_y" ? pauli_y() : pauli_z();
    }
    if (dim < 2) throw Error(ErrorCode::Parse, "field 'dim' must be at least 2");
    const std::vector<double> values = spectrum.empty() ? default_spectrum(dim) : spectrum;
    if (static_cast<Eigen::Index>(values.size()) != dim) {
        throw Error(ErrorCode::Parse, "field 'spectrum' must have dim entries");
    }
    if (name == "computational") return basis_operator(computational_basis(dim), values);
    if (name == "fourier") return basis_operator(fourier_basis(dim), values);
    throw Error(ErrorCode::Parse, "field 'preset' has unknown value '" + name + "'");
}

inline Observable parse_observable(const Json& j, double cluster_tol = kClusterTol) {
    if (!j.is_object()) throw Error(ErrorCode::Parse, "observable document must be a JSON object");
    ComplexMatrix m;
    if (j.contains("preset")) {
        if (!j.at("preset").is_string()) throw Error(ErrorCode::Parse, "field 'preset' must be a string");
        Eigen::Index dim = 2;
        if (j.contains("dim")) {
            if (!j.at("dim").is_number_integer()) throw Error(ErrorCode::Parse, "field 'dim' must be an integer");
            dim = static_cast<Eigen::Index>(j.at("dim").get<long long>());
        }
        std::vector<double> spectrum;
        if (j.contains("spectrum")) {
            const Json& s = j.at("spectrum");
            if (!s.is_array()) throw Error(ErrorCode::Parse, "field 'spectrum' must be an array of numbers");
            for (const Json& x : s) {
                if (!x.is_number()) throw Error(ErrorCode::Parse, "field 'spectrum' must be an array of numbers");
                spectrum.push_back(x.get<double>());
            }
        }
        m = preset_operator(j.at("preset").get<std::string>(), dim, spectrum);
    } else if (j.contains("matrix")) {
        m = matrix_from_json(j.at("matrix"), "matrix");
    } else {
        throw Error(ErrorCode::Parse, "observable needs field 'preset' or 'matrix'");
    }
    if (!is_hermitian(m)) throw Error(ErrorCode::Parse, "field 'matrix' is not Hermitian");
    return decompose(m, cluster_tol);
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::Parse, "'" + path + "' is not valid JSON: " + e.what());
    }
}

inline Json to_json(const std::vector<double>& v) { return Json(v); }

inline Json bound_to_json(const MajorizationBound& bound, const SCoefficients& coeffs) {
    return Json{{"omega", bound.omega()},
                {"prefix", bound.prefix()},
                {"s", coeffs.s},
                {"mode", coeffs.mode == CoefficientMode::TwoObservable ? "two-observable" : "many-observable"},
                {"observables", coeffs.observable_count}};
}

inline Json report_to_json(const DetectionReport& report) {
    Json sides = Json::array();
    for (const auto& s : report.sides) {
        Json checks = Json::array();
        for (const auto& c : s.checks) {
            checks.push_back(
                {{"k", c.k}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"margin", c.margin}, {"effective", c.effective}});
        }
        Json range = Json::array();
        if (s.effective_first != 0) range = Json::array({s.effective_first, s.effective_last});
        sides.push_back({{"side", to_string(s.side)},
                         {"omega", s.bound.omega()},
                         {"effective_range", range},
                         {"checks", checks}});
    }
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        violations.push_back(
            {{"side", to_string(v.side)}, {"k", v.k}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"margin", v.margin}});
    }
    return Json{{"verdict", to_string(report.verdict)},
                {"borderline", report.borderline},
                {"tol", report.tol},
                {"side", report.sides_tested()},
                {"distribution", report.distribution.values()},
                {"sides", sides},
                {"violations", violations}};
}

/// %.17g: '.' decimal separator regardless of locale in the "C" locale the
/// CLI runs under; enough digits to round-trip any double.
inline std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace majorant::io
