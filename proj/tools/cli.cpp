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

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "majorant/io.hpp"
#include "majorant/majorant.hpp"

namespace majorant::cli {
namespace {

using io::format_double;
using io::Json;

struct Common {
    double tol = kMajorizationTol;
    double cluster_tol = kClusterTol;
    std::size_t dim_limit = 0;   // 0: keep the default or the environment value
    std::size_t many_limit = 0;  // 0: keep the default
    bool json = false;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--tol", c.tol, "Tolerance for every majorization comparison")->check(CLI::NonNegativeNumber);
    sub->add_option("--cluster-tol", c.cluster_tol, "Eigenvalues closer than this form one outcome")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--dim-limit", c.dim_limit, "Largest d for submatrix enumeration (cost grows as 4^d)");
    sub->add_option("--many-limit", c.many_limit, "Largest L*d for many-observable enumeration (cost 2^(L*d))");
}

std::string fmt(double x, const char* format = "%.10g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, format, x);
    return buf;
}

std::string join(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
    return s + "]";
}

double parse_number(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(x)) {
        throw Error(ErrorCode::Parse, what + " expects a number, got '" + text + "'");
    }
    return x;
}

Eigen::Index parse_dim(const std::string& text, const std::string& what) {
    const double x = parse_number(text, what);
    if (x < 1 || x != std::floor(x) || x > 64) throw Error(ErrorCode::Parse, what + " expects a dimension in 1..64");
    return static_cast<Eigen::Index>(x);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

Limits resolve_limits(const Common& c, const std::string& env, std::ostream& err) {
    Limits limits;
    if (!env.empty()) {
        const double x = parse_number(env, "MAJORANT_DIM_LIMIT");
        if (x < 1 || x != std::floor(x)) throw Error(ErrorCode::Parse, "MAJORANT_DIM_LIMIT must be a positive integer");
        limits.max_dim = static_cast<std::size_t>(x);
    }
    if (c.dim_limit != 0) limits.max_dim = c.dim_limit;
    if (c.many_limit != 0) limits.max_many_cost = c.many_limit;
    if (limits.max_dim > 8) {
        err << "warning: submatrix enumeration up to d = " << limits.max_dim << " visits up to 4^d submatrices\n";
    }
    if (limits.max_many_cost > 12) {
        err << "warning: many-observable enumeration up to L*d = " << limits.max_many_cost
            << " visits up to 2^(L*d) subsets\n";
    }
    return limits;
}

DetectOptions detect_options(const Common& c, const Limits& limits) {
    DetectOptions o;
    o.tol = c.tol;
    o.cluster_tol = c.cluster_tol;
    o.limits = limits;
    return o;
}

// ---------------------------------------------------------------------------
// States and observables

struct LoadedState {
    ComplexMatrix rho;
    std::vector<Eigen::Index> dims;
};

StateFamily family_by_name(const std::string& name, Eigen::Index dim) {
    if (name == "werner") {
        if (dim != 2) throw Error(ErrorCode::Parse, "family 'werner' is two-qubit only");
        return werner_family();
    }
    if (name == "isotropic") return isotropic_family(dim);
    if (name == "separable-mix") return separable_mix_family(dim);
    throw Error(ErrorCode::Parse, "unknown family '" + name + "' (werner, isotropic, separable-mix)");
}

LoadedState load_state(const std::string& token) {
    const std::vector<std::string> parts = split(token, ':');
    const std::string& head = parts.front();
    if (head == "bell" && parts.size() == 1) return {bell(), {2, 2}};
    if (head == "product00" && parts.size() == 1) return {product_ground(2, 2), {2, 2}};
    if (head == "werner" && parts.size() == 2) return {werner(parse_number(parts[1], "werner:W")), {2, 2}};
    if (head == "isotropic" && parts.size() == 3) {
        const Eigen::Index d = parse_dim(parts[1], "isotropic:D:F");
        return {isotropic(d, parse_number(parts[2], "isotropic:D:F")), {d, d}};
    }
    if (head == "maxmixed" && parts.size() == 2) {
        const Eigen::Index d = parse_dim(parts[1], "maxmixed:D");
        return {maximally_mixed(d * d), {d, d}};
    }
    const io::StateFile f = io::parse_state(io::read_json_file(token));
    return {f.matrix, f.dims};
}

struct Sides {
    std::vector<Observable> a;
    std::vector<Observable> b;
};

Sides preset_pairs(const std::string& name, Eigen::Index dim) {
    if (name == "pauli") {
        const ObservablePair p = pauli_pair();
        return {{p.x, p.z}, {p.x, p.z}};
    }
    if (name == "fourier") {
        const ObservablePair p = fourier_pair(dim);
        const ObservablePair q = fourier_partner_pair(dim);
        return {{p.x, p.z}, {q.x, q.z}};
    }
    if (name == "mub") {
        // sigma_y pairs with -sigma_y so that |Phi+> is a joint eigenstate.
        return {mub_triple(), {decompose(pauli_x()), decompose(ComplexMatrix(-pauli_y())), decompose(pauli_z())}};
    }
    throw Error(ErrorCode::Parse, "unknown pairs preset '" + name + "' (pauli, fourier, mub)");
}

std::vector<Observable> load_observables(const std::vector<std::string>& paths, double cluster_tol) {
    std::vector<Observable> out;
    for (const auto& p : paths) {
        try {
            out.push_back(io::parse_observable(io::read_json_file(p), cluster_tol));
        } catch (const Error& e) {
            throw Error(e.code(), p + ": " + e.what());
        }
    }
    return out;
}

Sides resolve_sides(const std::string& preset, Eigen::Index dim, const std::vector<std::string>& a_files,
                    const std::vector<std::string>& b_files, double cluster_tol) {
    if (!a_files.empty()) {
        if (!preset.empty()) throw Error(ErrorCode::Parse, "use either --pairs or --a/--b, not both");
        Sides s{load_observables(a_files, cluster_tol), {}};
        s.b = b_files.empty() ? s.a : load_observables(b_files, cluster_tol);
        if (s.a.size() != s.b.size()) throw Error(ErrorCode::Parse, "--a and --b need the same number of files");
        return s;
    }
    if (!b_files.empty()) throw Error(ErrorCode::Parse, "--b needs --a");
    return preset_pairs(preset.empty() ? "pauli" : preset, dim);
}

// Uniform front over the two- and many-observable detectors.
struct AnyDetector {
    std::function<std::vector<ProbabilityVector>(const ComplexMatrix&)> distributions;
    std::function<DetectionReport(const ProbabilityVector&)> evaluate;

    DetectionReport operator()(const ComplexMatrix& rho) const { return evaluate(direct_sum(distributions(rho))); }
};

AnyDetector make_detector(const Sides& s, const DetectOptions& opts) {
    if (s.a.size() == 2) {
        auto det = std::make_shared<PairDetector>(ObservablePair(s.a[0], s.a[1]), ObservablePair(s.b[0], s.b[1]), opts);
        return {[det](const ComplexMatrix& r) { return det->distributions(r); },
                [det](const ProbabilityVector& p) { return det->evaluate(p); }};
    }
    auto det = std::make_shared<ManyDetector>(s.a, s.b, opts);
    return {[det](const ComplexMatrix& r) { return det->distributions(r); },
            [det](const ProbabilityVector& p) { return det->evaluate(p); }};
}

// ---------------------------------------------------------------------------
// Subcommands

struct BoundArgs {
    std::string preset;
    Eigen::Index dim = 0;
    std::vector<std::string> files;
};

int cmd_bound(const BoundArgs& a, const Common& c, const Limits& limits, std::ostream& out) {
    std::vector<Observable> obs;
    if (!a.preset.empty()) {
        if (!a.files.empty()) throw Error(ErrorCode::Parse, "use either --preset or observable files, not both");
        const Sides s = preset_pairs(a.preset, a.dim == 0 ? (a.preset == "fourier" ? 3 : 2) : a.dim);
        obs = s.a;
    } else {
        if (a.files.empty()) throw Error(ErrorCode::Parse, "bound needs --preset or at least one observable file");
        obs = load_observables(a.files, c.cluster_tol);
    }
    SCoefficients coeffs;
    MajorizationBound bound;
    if (obs.size() == 2) {
        const ObservablePair pair(obs[0], obs[1]);
        coeffs = submatrix_coefficients(overlap_matrix(pair), limits);
        bound = direct_sum_bound(pair, limits);
    } else {
        coeffs = many_coefficients(obs, limits);
        bound = many_bound(obs, limits);
    }
    if (c.json) {
        out << io::bound_to_json(bound, coeffs).dump(2) << "\n";
        return kOk;
    }
    out << "mode: " << (coeffs.mode == CoefficientMode::TwoObservable ? "two-observable" : "many-observable")
        << " (L = " << coeffs.observable_count << ", d = " << obs.front().dim() << ")\n";
    out << "s:      " << join(coeffs.s) << "\n";
    out << "omega:  " << join(bound.omega()) << "\n";
    out << "prefix: " << join(bound.prefix()) << "\n";
    return kOk;
}

void print_report(const DetectionReport& r, std::ostream& out) {
    out << "verdict: " << to_string(r.verdict) << (r.borderline ? " (borderline margin within tol)" : "") << "\n";
    out << "sides tested: " << r.sides_tested() << "\n";
    out << "tol: " << fmt(r.tol) << "\n";
    out << "measured: " << join(r.distribution.values()) << "\n";
    for (const auto& s : r.sides) {
        out << "\nside " << to_string(s.side) << "  omega " << join(s.bound.omega()) << "\n";
        if (s.effective_first == 0) {
            out << "  no effective inequalities\n";
        } else {
            out << "  effective k = " << s.effective_first << ".." << s.effective_last << "\n";
        }
        char line[128];
        std::snprintf(line, sizeof line, "  %4s %14s %14s %14s  %s\n", "k", "lhs", "rhs", "margin", "status");
        out << line;
        for (const auto& c : s.checks) {
            const char* status = !c.effective ? "trivial" : c.margin > r.tol ? "VIOLATED" : c.margin > 0 ? "borderline" : "ok";
            std::snprintf(line, sizeof line, "  %4zu %14.9f %14.9f %14.9f  %s\n", c.k, c.lhs, c.rhs, c.margin, status);
            out << line;
        }
    }
    if (auto w = r.worst()) out << "\nworst effective margin: " << fmt(w->margin) << " at k = " << w->k << "\n";
}

struct DetectArgs {
    std::string state;
    std::string pairs;
    Eigen::Index dim = 0;
    std::vector<std::string> a_files;
    std::vector<std::string> b_files;
    std::size_t shots = 0;
    std::uint64_t seed = 1;
};

int cmd_detect(const DetectArgs& a, const Common& c, const Limits& limits, std::ostream& out) {
    const LoadedState st = load_state(a.state);
    const Eigen::Index dim = a.dim != 0 ? a.dim : st.dims.front();
    const Sides sides = resolve_sides(a.pairs, dim, a.a_files, a.b_files, c.cluster_tol);
    const AnyDetector det = make_detector(sides, detect_options(c, limits));
    std::vector<ProbabilityVector> parts = det.distributions(st.rho);
    if (a.shots > 0) {
        Rng rng(a.seed);
        for (auto& p : parts) p = sample_distribution(p, a.shots, rng);
    }
    const DetectionReport r = det.evaluate(direct_sum(parts));
    if (c.json) {
        out << io::report_to_json(r).dump(2) << "\n";
    } else {
        print_report(r, out);
    }
    return r.verdict == Verdict::Entangled ? kDetected : kOk;
}

struct ScanArgs {
    std::string family;
    Eigen::Index dim = 2;
    std::string grid;
    std::string pairs;
    std::string out_path;
    std::string lorenz_path;
};

std::vector<double> parse_grid(const std::string& token) {
    const std::vector<std::string> p = split(token, ':');
    if (p.size() != 3) throw Error(ErrorCode::Parse, "--grid expects lo:hi:step, got '" + token + "'");
    return make_grid(parse_number(p[0], "--grid lo"), parse_number(p[1], "--grid hi"),
                     parse_number(p[2], "--grid step"));
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
    return f;
}

int cmd_scan(const ScanArgs& a, const Common& c, const Limits& limits, std::ostream& out) {
    const StateFamily family = family_by_name(a.family, a.dim);
    const std::vector<double> grid = parse_grid(a.grid);
    if (grid.front() < family.lo || grid.back() > family.hi) {
        throw Error(ErrorCode::ParameterOutOfRange, "--grid leaves the family range [" + fmt(family.lo) + ", " +
                                                        fmt(family.hi) + "]");
    }
    const std::string preset = a.pairs.empty() ? (a.dim == 2 ? "pauli" : "fourier") : a.pairs;
    const AnyDetector det = make_detector(preset_pairs(preset, a.dim), detect_options(c, limits));
    const ScanResult result = scan(family, grid, [&](const ComplexMatrix& rho) { return det(rho); });

    std::ostringstream csv;
    csv << "parameter,verdict,worst_k,margin\n";
    std::size_t detections = 0;
    for (const auto& p : result.points) {
        const auto w = p.report.worst();
        if (p.report.verdict == Verdict::Entangled) ++detections;
        csv << format_double(p.parameter) << "," << to_string(p.report.verdict) << ","
            << (w ? std::to_string(w->k) : "") << "," << (w ? format_double(w->margin) : "") << "\n";
    }

    std::ostringstream summary;
    summary << "points: " << result.points.size() << "\n";
    summary << "detections: " << detections << "\n";
    if (result.threshold) {
        summary << "threshold: " << format_double(*result.threshold) << "\n";
        if (a.family == "isotropic") {
            summary << "werner_equivalent: " << format_double(isotropic_to_werner_weight(a.dim, *result.threshold))
                    << "\n";
        }
    } else {
        summary << "threshold: none\n";
    }

    if (!a.lorenz_path.empty()) {
        std::ofstream f = open_out(a.lorenz_path);
        f << "parameter,side,k,lhs,rhs\n";
        for (const auto& p : result.points)
            for (const auto& s : p.report.sides)
                for (const auto& ck : s.checks)
                    f << format_double(p.parameter) << "," << to_string(s.side) << "," << ck.k << ","
                      << format_double(ck.lhs) << "," << format_double(ck.rhs) << "\n";
    }
    if (!a.out_path.empty()) {
        open_out(a.out_path) << csv.str();
        out << summary.str();
    } else {
        out << csv.str();
        std::istringstream lines(summary.str());
        for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
    }
    return kOk;
}

struct OracleArgs {
    std::string pairs;
    Eigen::Index dim = 2;
    std::vector<std::string> a_files;
    std::vector<std::string> b_files;
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
    std::uint64_t seed = 1;
    std::size_t restarts = 32;
};

std::string group_list(const Observable& o) {
    std::string s;
    for (std::size_t g = 0; g < o.outcome_count(); ++g) {
        s += (g ? ", " : "") + std::to_string(g) + ": " + fmt(o.groups()[g].eigenvalue) + " (rank " +
             std::to_string(o.groups()[g].rank()) + ")";
    }
    return s;
}

std::string index_set(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
}

int cmd_oracle(const OracleArgs& a, const Common& c, const Limits& limits, std::ostream& out) {
    const Sides sides = resolve_sides(a.pairs, a.dim, a.a_files, a.b_files, c.cluster_tol);
    if (sides.a.size() != 2) throw Error(ErrorCode::Parse, "oracle needs exactly two observables per side");
    const ObservablePair pa(sides.a[0], sides.a[1]);
    const ObservablePair pb(sides.b[0], sides.b[1]);
    const SelectionProblem problem = SelectionProblem::from_pairs(pa, pb, a.first, a.second, c.cluster_tol);
    AscentOptions opts;
    opts.restarts = a.restarts;
    const SeparableEstimate est = sep_prefix_supremum(problem, a.seed, opts);
    const std::size_t l = problem.size();
    const double prefix_a = direct_sum_bound(pa, limits).prefix_at(l);
    const double prefix_b = direct_sum_bound(pb, limits).prefix_at(l);
    const double ceiling = state_prefix_supremum(problem.projectors());
    const bool falsified = est.value > std::min(prefix_a, prefix_b) + c.tol;

    if (c.json) {
        const Json j{{"I", a.first},
                     {"J", a.second},
                     {"l", l},
                     {"seed", a.seed},
                     {"restarts", a.restarts},
                     {"estimate", est.value},
                     {"estimate_kind", "lower_bound"},
                     {"bound_prefix", {{"A", prefix_a}, {"B", prefix_b}}},
                     {"ceiling", ceiling},
                     {"ceiling_kind", "exact"},
                     {"falsified", falsified}};
        out << j.dump(2) << "\n";
    } else {
        out << "first groups (X_A x X_B): " << group_list(problem.first()) << "\n";
        out << "second groups (Z_A x Z_B): " << group_list(problem.second()) << "\n";
        out << "selection: I = " << index_set(a.first) << ", J = " << index_set(a.second) << ", l = " << l << "\n";
        out << "separable estimate (lower bound, pure-product ascent): " << fmt(est.value) << "\n";
        out << "bound prefix A, Omega_" << l << ": " << fmt(prefix_a) << "\n";
        out << "bound prefix B, Omega_" << l << ": " << fmt(prefix_b) << "\n";
        out << "ceiling over all states (exact): " << fmt(ceiling) << "\n";
        out << "status: " << (falsified ? "FALSIFIED (estimate exceeds the bound)" : "consistent") << "\n";
    }
    return falsified ? kDetected : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::string& dim_limit_env) {
    CLI::App app{"Direct-sum majorization bounds and entanglement detection"};
    app.name("majorant");
    app.require_subcommand(1);
    Common common;

    BoundArgs bound_args;
    CLI::App* bound = app.add_subcommand("bound", "Print the uncertainty bound of two or more observables");
    bound->add_option("--preset", bound_args.preset, "pauli, fourier or mub");
    bound->add_option("--dim", bound_args.dim, "Dimension for the fourier preset (default 3)");
    bound->add_option("files", bound_args.files, "Observable JSON files");
    bound->add_flag("--json", common.json, "Emit JSON");
    add_common(bound, common);

    DetectArgs detect_args;
    CLI::App* detect = app.add_subcommand("detect", "Test a bipartite state; exit 1 when entanglement is certified");
    detect->add_option("--state", detect_args.state,
                       "bell, product00, werner:W, isotropic:D:F, maxmixed:D or a state JSON file")
        ->required();
    detect->add_option("--pairs", detect_args.pairs, "pauli, fourier or mub (default pauli)");
    detect->add_option("--dim", detect_args.dim, "Local dimension for the fourier preset (default: from the state)");
    detect->add_option("--a", detect_args.a_files, "Observable files for side A (two: pair mode, more: many mode)");
    detect->add_option("--b", detect_args.b_files, "Observable files for side B (default: same as --a)");
    detect->add_option("--shots", detect_args.shots, "Replace exact probabilities by this many samples each");
    detect->add_option("--seed", detect_args.seed, "Seed for --shots");
    detect->add_flag("--json", common.json, "Emit the report as JSON");
    add_common(detect, common);

    ScanArgs scan_args;
    CLI::App* scan_cmd = app.add_subcommand("scan", "Sweep a state family and locate the detection threshold");
    scan_cmd->add_option("--family", scan_args.family, "werner, isotropic or separable-mix")->required();
    scan_cmd->add_option("--dim", scan_args.dim, "Local dimension (default 2)");
    scan_cmd->add_option("--grid", scan_args.grid, "lo:hi:step")->required();
    scan_cmd->add_option("--pairs", scan_args.pairs, "pauli, fourier or mub (default pauli at d = 2, else fourier)");
    scan_cmd->add_option("--out", scan_args.out_path, "Write the CSV here instead of stdout");
    scan_cmd->add_option("--lorenz", scan_args.lorenz_path, "Write prefix sums of lhs and bound as CSV");
    add_common(scan_cmd, common);

    OracleArgs oracle_args;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Estimate the separable supremum of a selected mass");
    oracle_cmd->add_option("--pairs", oracle_args.pairs, "pauli or fourier (default pauli)");
    oracle_cmd->add_option("--dim", oracle_args.dim, "Local dimension for the fourier preset (default 2)");
    oracle_cmd->add_option("--a", oracle_args.a_files, "Two observable files for side A");
    oracle_cmd->add_option("--b", oracle_args.b_files, "Two observable files for side B");
    oracle_cmd->add_option("--I", oracle_args.first, "Group indices of X_A x X_B")->delimiter(',');
    oracle_cmd->add_option("--J", oracle_args.second, "Group indices of Z_A x Z_B")->delimiter(',');
    oracle_cmd->add_option("--seed", oracle_args.seed, "Master seed for the restarts");
    oracle_cmd->add_option("--restarts", oracle_args.restarts, "Random restarts")->check(CLI::PositiveNumber);
    oracle_cmd->add_flag("--json", common.json, "Emit JSON");
    add_common(oracle_cmd, common);

    std::string state_arg;
    CLI::App* state_cmd = app.add_subcommand("state", "Write a preset state as JSON");
    state_cmd->add_option("state", state_arg, "bell, product00, werner:W, isotropic:D:F or maxmixed:D")->required();

    std::vector<std::string> argv_store{"majorant"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kError;
    }

    try {
        const Limits limits = resolve_limits(common, dim_limit_env, err);
        if (*bound) return cmd_bound(bound_args, common, limits, out);
        if (*detect) return cmd_detect(detect_args, common, limits, out);
        if (*scan_cmd) return cmd_scan(scan_args, common, limits, out);
        if (*oracle_cmd) return cmd_oracle(oracle_args, common, limits, out);
        if (*state_cmd) {
            const LoadedState st = load_state(state_arg);
            out << io::state_to_json(st.rho, st.dims).dump(2) << "\n";
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

}  // namespace majorant::cli
