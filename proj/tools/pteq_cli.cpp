// Copyright 2026 The pteq Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pteq/bipartite.hpp"
#include "pteq/criteria.hpp"
#include "pteq/linalg.hpp"
#include "pteq/matrix_io.hpp"
#include "pteq/selftest.hpp"
#include "pteq/sweep.hpp"
#include "pteq/xstate.hpp"

namespace {

using namespace pteq;
using nlohmann::json;

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kParse = 2,
    kValidation = 3,
    kNotDensity = 4,
    kIo = 5,
};

/// Failure carrying the process exit code.
struct CliError {
    int code;
    std::string message;
};

struct GlobalOptions {
    double tol = kDefaultTol;
    bool json = false;
    std::string out;
};

/// Accepts "re", "re,im", "(re,im)" or "a+bi" style literals.
Complex parse_complex(const std::string &text) {
    static const std::regex pair(R"(^\(?\s*([^,()]+?)\s*,\s*([^,()]+?)\s*\)?$)");
    static const std::regex algebraic(
        R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij])?\s*$)");
    static const std::regex imaginary(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij]\s*$)");
    std::smatch m;
    try {
        if (std::regex_match(text, m, imaginary)) {
            const double im = m[2].matched ? std::stod(m[2].str()) : 1.0;
            return {0.0, m[1].str() == "-" ? -im : im};
        }
        if (std::regex_match(text, m, pair)) {
            return {std::stod(m[1].str()), std::stod(m[2].str())};
        }
        if (std::regex_match(text, m, algebraic) && (m[1].matched || m[2].matched)) {
            const double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
            double im = 0.0;
            if (m[2].matched) {
                im = m[3].matched ? std::stod(m[3].str()) : 1.0;
                if (m[2].str() == "-") {
                    im = -im;
                }
            }
            return {re, im};
        }
    } catch (const std::exception &) {
    }
    throw CliError{kValidation, "cannot parse complex number '" + text + "' (use re, re,im or a+bi)"};
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError{kIo, "cannot read " + path};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) {
        throw CliError{kIo, "cannot write " + path};
    }
}

MatrixFile load_matrix(const std::string &path) {
    const std::string text = read_file(path);
    try {
        return parse_matrix_file(text);
    } catch (const ParseError &e) {
        throw CliError{kParse, path + ": " + e.what()};
    } catch (const std::invalid_argument &e) {
        // Schema-level dimension or finiteness problems.
        throw CliError{kParse, path + ": " + e.what()};
    }
}

BipartiteDims resolve_dims(const MatrixFile &file, std::optional<std::size_t> m, std::optional<std::size_t> n) {
    std::optional<BipartiteDims> dims = file.dims;
    try {
        if (m || n) {
            if (!m || !n) {
                throw CliError{kValidation, "--m and --n must be given together"};
            }
            dims.emplace(*m, *n);
        }
    } catch (const DimensionError &e) {
        throw CliError{kValidation, e.what()};
    }
    if (!dims) {
        throw CliError{kValidation, "subsystem dimensions unknown: pass --m and --n or add \"dims\" to the file"};
    }
    if (dims->dim() != file.matrix.dim()) {
        throw CliError{kValidation, "dims (" + std::to_string(dims->m()) + "," + std::to_string(dims->n()) +
                                        ") do not match matrix order " + std::to_string(file.matrix.dim())};
    }
    return *dims;
}

XParams family_params_from(double t1, double t2, const std::string &v1, const std::string &v2) {
    XParams params = XParams::symmetric(t1, t2, parse_complex(v1), parse_complex(v2));
    try {
        params.validate();
    } catch (const ValidationError &e) {
        throw CliError{kValidation, e.what()};
    }
    return params;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::string join(const std::vector<double> &values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? " " : "") + format_real(values[i]);
    }
    return out;
}

const char *yes_no(bool b) { return b ? "true" : "false"; }

// -- subcommands ------------------------------------------------------------

int cmd_pt(const GlobalOptions &g, const std::string &input, std::optional<std::size_t> m,
           std::optional<std::size_t> n) {
    MatrixFile file = load_matrix(input);
    const BipartiteDims dims = resolve_dims(file, m, n);
    write_output(g.out, serialize_matrix_file({partial_transpose(file.matrix, dims), file.dims}));
    return kOk;
}

int cmd_analyze(const GlobalOptions &g, const std::string &input, std::optional<std::size_t> m,
                std::optional<std::size_t> n) {
    const MatrixFile file = load_matrix(input);
    const BipartiteDims dims = resolve_dims(file, m, n);
    CriterionReport report;
    try {
        report = analyze(file.matrix, dims, g.tol);
    } catch (const InvalidStateError &e) {
        throw CliError{kNotDensity, e.what()};
    }

    std::ostringstream out;
    if (g.json) {
        json j{{"dims", {dims.m(), dims.n()}},
               {"trace", report.trace},
               {"hermiticity_defect", report.hermiticity_defect},
               {"min_eigenvalue", report.min_eigenvalue},
               {"min_pt_eigenvalue", report.min_pt_eigenvalue},
               {"ppt", report.ppt},
               {"x_shaped", report.x_shaped},
               {"concurrence", report.concurrence ? json(*report.concurrence) : json(nullptr)}};
        if (report.factorization) {
            const auto &f = *report.factorization;
            json jf{{"t1", f.params.t1},
                    {"t2", f.params.t2},
                    {"v1", complex_json(f.params.v1)},
                    {"v2", complex_json(f.params.v2)},
                    {"gap_frobenius", f.gap_frobenius},
                    {"gap_eigenvalues", f.gap_eigenvalues},
                    {"equality_holds", f.equality_holds}};
            if (f.theorem2) {
                jf["theorem2"] = {{"lhs", f.theorem2->sides.lhs},
                                  {"rhs", f.theorem2->sides.rhs},
                                  {"satisfied", f.theorem2->sides.satisfied},
                                  {"rank_deficient", f.theorem2->rank_deficient}};
            }
            j["factorization"] = jf;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "dims: " << dims.m() << "x" << dims.n() << '\n'
            << "hermitian: true (defect " << format_real(report.hermiticity_defect) << ")\n"
            << "trace: " << format_real(report.trace) << '\n'
            << "min_eigenvalue: " << format_real(report.min_eigenvalue) << '\n'
            << "min_pt_eig: " << format_real(report.min_pt_eigenvalue) << '\n'
            << "ppt: " << yes_no(report.ppt) << '\n'
            << "x_shaped: " << yes_no(report.x_shaped) << '\n';
        if (report.concurrence) {
            out << "concurrence: " << format_real(*report.concurrence) << '\n';
        }
        if (report.factorization) {
            const auto &f = *report.factorization;
            out << "factor_t1: " << format_real(f.params.t1) << '\n'
                << "factor_t2: " << format_real(f.params.t2) << '\n'
                << "gap_frobenius: " << format_real(f.gap_frobenius) << '\n'
                << "gap_eigenvalues: " << join(f.gap_eigenvalues) << '\n'
                << "equality_holds: " << yes_no(f.equality_holds) << '\n';
            if (f.theorem2) {
                out << "theorem2_lhs: " << format_real(f.theorem2->sides.lhs) << '\n'
                    << "theorem2_rhs: " << format_real(f.theorem2->sides.rhs) << '\n'
                    << "theorem2_satisfied: " << yes_no(f.theorem2->sides.satisfied) << '\n'
                    << "rank_deficient: " << yes_no(f.theorem2->rank_deficient) << '\n';
            }
        }
    }
    write_output(g.out, out.str());
    return kOk;
}

int cmd_construct(const GlobalOptions &g, double t1, double t2, const std::string &v1, const std::string &v2,
                  bool factors) {
    const XParams params = family_params_from(t1, t2, v1, v2);
    if (std::abs(t1 + t2 - 0.5) > 1e-12) {
        std::cerr << "warning: t1 + t2 = " << format_real(t1 + t2)
                  << " != 1/2, the product is not a normalized state\n";
    }
    const FactorPair pair = build_factors(params);
    const BipartiteDims qubits = BipartiteDims::qubits();
    write_output(g.out, serialize_matrix_file({mul(pair.p1, pair.p2), qubits}));
    if (factors) {
        if (g.out.empty() || g.out == "-") {
            throw CliError{kValidation, "--factors needs --out so companion files have a location"};
        }
        std::filesystem::path base(g.out);
        const std::string stem = (base.parent_path() / base.stem()).string();
        write_output(stem + ".p1.json", serialize_matrix_file({pair.p1, qubits}));
        write_output(stem + ".p2.json", serialize_matrix_file({pair.p2, qubits}));
    }
    return kOk;
}

int cmd_check_equality(const GlobalOptions &g, double t1, double t2, const std::string &v1, const std::string &v2) {
    const XParams params = family_params_from(t1, t2, v1, v2);
    const GapReport gap = family_gap(params, g.tol);
    std::ostringstream out;
    if (g.json) {
        out << json{{"gap_frobenius", gap.frobenius},
                    {"gap_eigenvalues", gap.eigenvalues},
                    {"equality_holds", gap.equality_holds}}
                   .dump(2)
            << '\n';
    } else {
        out << "gap_frobenius: " << format_real(gap.frobenius) << '\n'
            << "gap_eigenvalues: " << join(gap.eigenvalues) << '\n'
            << (gap.equality_holds ? "equality holds" : "equality fails") << '\n';
    }
    write_output(g.out, out.str());
    return kOk;
}

int cmd_sweep(const GlobalOptions &g, double t1, std::size_t grid, const SweepOptions &options) {
    std::vector<SweepRow> rows;
    try {
        rows = sweep_rows(t1, grid, options, g.tol);
    } catch (const ValidationError &e) {
        throw CliError{kValidation, e.what()};
    }
    std::ostringstream out;
    write_sweep_csv(out, rows);
    write_output(g.out, out.str());
    return kOk;
}

int cmd_counterexample(const GlobalOptions &g) {
    const CMatrix rho = counterexample_state();
    const BipartiteDims qubits = BipartiteDims::qubits();
    const double tr = trace(rho).real();
    const double lowest = min_eigenvalue(rho, g.tol);
    const bool psd = lowest >= -g.tol;
    const double lowest_pt = min_eigenvalue(partial_transpose(rho, qubits), g.tol);
    const bool ppt = ppt_verdict(rho, qubits, g.tol);
    const double gap = frobenius_norm(counterexample_gap());
    const bool converse_fails = ppt && gap > g.tol;

    std::ostringstream out;
    if (g.json) {
        out << json{{"trace", tr},
                    {"min_eigenvalue", lowest},
                    {"psd", psd},
                    {"min_pt_eigenvalue", lowest_pt},
                    {"ppt", ppt},
                    {"gap_frobenius", gap},
                    {"converse_fails", converse_fails}}
                   .dump(2)
            << '\n';
    } else {
        char trace_text[32];
        std::snprintf(trace_text, sizeof trace_text, "%.12f", tr);
        out << "trace: " << trace_text << '\n'
            << "min_eigenvalue: " << format_real(lowest) << '\n'
            << "psd: " << yes_no(psd) << '\n'
            << "min_pt_eig: " << format_real(lowest_pt) << '\n'
            << "ppt: " << yes_no(ppt) << '\n'
            << "gap_frobenius: " << format_real(gap) << '\n'
            << "verdict: " << (converse_fails ? "converse fails" : "converse not refuted") << '\n';
    }
    write_output(g.out, out.str());
    return kOk;
}

int cmd_selftest(const GlobalOptions &g, const std::string &corrupt) {
    GoldenTable goldens = default_goldens();
    if (!corrupt.empty() && !corrupt_golden(goldens, corrupt)) {
        throw CliError{kValidation, "unknown golden '" + corrupt + "'"};
    }
    const SelftestResult result = run_selftest(goldens);
    std::ostringstream out;
    for (const std::string &name : result.passed) {
        out << "ok   " << name << '\n';
    }
    if (!result.ok()) {
        out << "FAIL " << *result.failed_check << ": " << result.detail << '\n';
    }
    write_output(g.out, out.str());
    return result.ok() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Partial transposition and X-state separability toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--tol", g.tol, "Tolerance for Hermiticity/PSD/equality decisions")->capture_default_str();
    app.add_flag("--json", g.json, "Machine-readable reports");
    app.add_option("--out", g.out, "Output path (default: stdout)");

    std::string input;
    std::optional<std::size_t> m;
    std::optional<std::size_t> n;
    double t1 = 0.0;
    double t2 = 0.0;
    std::string v1 = "0";
    std::string v2 = "0";
    bool factors = false;
    std::size_t grid = 101;
    SweepOptions sweep_options;
    std::string corrupt;

    auto *pt = app.add_subcommand("pt", "Partial transpose (second subsystem) of a matrix file");
    pt->add_option("input", input, "Matrix file")->required();
    pt->add_option("--m", m, "First subsystem dimension");
    pt->add_option("--n", n, "Second subsystem dimension");

    auto *an = app.add_subcommand("analyze", "Density matrix diagnostics and separability criteria");
    an->add_option("input", input, "Matrix file")->required();
    an->add_option("--m", m, "First subsystem dimension");
    an->add_option("--n", n, "Second subsystem dimension");

    auto *construct = app.add_subcommand("construct", "Write rho = P1 P2 for the X-state family");
    construct->add_option("--t1", t1)->required();
    construct->add_option("--t2", t2)->required();
    construct->add_option("--v1", v1, "Complex: re, re,im or a+bi");
    construct->add_option("--v2", v2, "Complex: re, re,im or a+bi");
    construct->add_flag("--factors", factors, "Also write <out>.p1.json and <out>.p2.json");

    auto *eq = app.add_subcommand("check-equality", "Gap (P1P2)^G - P1^G P2^G for the family");
    eq->add_option("--t1", t1)->required();
    eq->add_option("--t2", t2)->required();
    eq->add_option("--v1", v1);
    eq->add_option("--v2", v2);

    auto *sweep = app.add_subcommand("sweep", "Determinant inequality over the |v1|,|v2| grid, as CSV");
    sweep->add_option("--t1", t1, "Equal weight t1 = t2")->default_val(0.25);
    sweep->add_option("--grid", grid, "Points per axis")->capture_default_str();
    sweep->add_flag("--literal-eq29", sweep_options.literal_eq29, "Use P2 with a 1/4 diagonal");
    sweep->add_option("--phase1", sweep_options.phase1, "Phase of v1 (radians)");
    sweep->add_option("--phase2", sweep_options.phase2, "Phase of v2 (radians)");

    auto *ce = app.add_subcommand("counterexample", "Replay the separable state with rho^G != P1^G P2^G");

    auto *st = app.add_subcommand("selftest", "Run the embedded golden suite");
    st->add_option("--corrupt", corrupt, "Perturb the named golden value (harness use)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kValidation;
    }

    try {
        if (*pt) return cmd_pt(g, input, m, n);
        if (*an) return cmd_analyze(g, input, m, n);
        if (*construct) return cmd_construct(g, t1, t2, v1, v2, factors);
        if (*eq) return cmd_check_equality(g, t1, t2, v1, v2);
        if (*sweep) return cmd_sweep(g, t1, grid, sweep_options);
        if (*ce) return cmd_counterexample(g);
        if (*st) return cmd_selftest(g, corrupt);
    } catch (const CliError &e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
    return kValidation;
}
