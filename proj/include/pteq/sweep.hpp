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

#ifndef PTEQ_SWEEP_HPP
#define PTEQ_SWEEP_HPP

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "pteq/bipartite.hpp"
#include "pteq/criteria.hpp"
#include "pteq/linalg.hpp"
#include "pteq/xstate.hpp"

namespace pteq {

/// Fixed-width text for reports and CSV: 12 significant digits, lowercase
/// exponent.
inline std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct SweepOptions {
    /// Use P2 with the printed 1/4 diagonal instead of the unit diagonal.
    /// Products then have trace 4 t1^2 and are renormalized before the state
    /// quantities are computed.
    bool literal_eq29 = false;
    /// Phases applied to v1 and v2. Zero reproduces the modulus-only grid.
    double phase1 = 0.0;
    double phase2 = 0.0;
};

struct SweepRow {
    double v1_abs = 0.0;
    double v2_abs = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
    double concurrence = 0.0;
    double min_pt_eig = 0.0;
};

inline constexpr const char *kSweepHeader = "v1_abs,v2_abs,lhs,rhs,satisfied,concurrence,min_pt_eig";

/// One grid point of the equal-weight family: P1 = t1 I, P2 unit-diagonal with
/// the given v1, v2.
inline SweepRow sweep_point(double t1, double v1_abs, double v2_abs, const SweepOptions &options,
                            double tol = kDefaultTol) {
    const Complex v1 = std::polar(v1_abs, options.phase1);
    const Complex v2 = std::polar(v2_abs, options.phase2);
    FactorPair factors = build_factors(XParams::symmetric(t1, t1, v1, v2));
    if (options.literal_eq29) {
        factors.p2 = Complex(0.25) * factors.p2;
    }
    const DeterminantCheck check = theorem2_check(factors.p1, factors.p2, tol);

    const CMatrix product = mul(factors.p1, factors.p2);
    const double norm = trace(product).real();
    const CMatrix rho = Complex(1.0 / norm) * product;
    const std::optional<XMatrix> x = as_x_matrix(rho, tol);

    SweepRow row;
    row.v1_abs = v1_abs;
    row.v2_abs = v2_abs;
    row.lhs = check.sides.lhs;
    row.rhs = check.sides.rhs;
    row.satisfied = check.sides.satisfied;
    row.concurrence = concurrence(*x);
    row.min_pt_eig = min_eigenvalue(partial_transpose(rho, BipartiteDims::qubits()), tol);
    return row;
}

/// grid x grid lattice over [0,1]^2 in |v1|, |v2|; |v1| is the outer index.
inline std::vector<SweepRow> sweep_rows(double t1, std::size_t grid, const SweepOptions &options = {},
                                        double tol = kDefaultTol) {
    if (grid < 2) {
        throw ValidationError("sweep grid must have at least 2 points per axis, got " + std::to_string(grid));
    }
    if (!std::isfinite(t1) || t1 <= 0.0) {
        throw ValidationError("sweep needs t1 > 0, got " + std::to_string(t1));
    }
    std::vector<SweepRow> rows;
    rows.reserve(grid * grid);
    const double step = 1.0 / static_cast<double>(grid - 1);
    for (std::size_t i = 0; i < grid; ++i) {
        const double a = i + 1 == grid ? 1.0 : static_cast<double>(i) * step;
        for (std::size_t j = 0; j < grid; ++j) {
            const double b = j + 1 == grid ? 1.0 : static_cast<double>(j) * step;
            rows.push_back(sweep_point(t1, a, b, options, tol));
        }
    }
    return rows;
}

inline void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << kSweepHeader << '\n';
    for (const SweepRow &r : rows) {
        out << format_real(r.v1_abs) << ',' << format_real(r.v2_abs) << ',' << format_real(r.lhs) << ','
            << format_real(r.rhs) << ',' << (r.satisfied ? "true" : "false") << ',' << format_real(r.concurrence)
            << ',' << format_real(r.min_pt_eig) << '\n';
    }
}

}  // namespace pteq

#endif  // PTEQ_SWEEP_HPP
