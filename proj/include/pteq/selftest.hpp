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

#ifndef PTEQ_SELFTEST_HPP
#define PTEQ_SELFTEST_HPP

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pteq/bipartite.hpp"
#include "pteq/criteria.hpp"
#include "pteq/linalg.hpp"
#include "pteq/xstate.hpp"

namespace pteq {

/// Named expected values for the embedded golden suite. Each check compares
/// against exactly one entry, so perturbing an entry makes exactly that check
/// fail.
using GoldenTable = std::map<std::string, std::vector<double>>;

inline GoldenTable default_goldens() {
    return {
        {"factor_p2_spectrum", {1.5, 1.3, 0.7, 0.5}},
        {"product_spectrum", {0.45, 0.28, 0.15, 0.12}},
        {"product_pt_min_eigenvalue", {0.2 - 0.3 * 0.5}},
        {"gap_spectrum", {0.15, 0.06, -0.06, -0.15}},
        {"equal_weight_gap_norm", {0.0}},
        {"bell_min_pt_eigenvalue", {-0.5}},
        {"bell_concurrence", {1.0}},
        {"counterexample_trace", {1.0}},
        {"counterexample_block_discriminants", {23.0 / 468.0, 23.0 / 468.0, 23.0 / 468.0, 23.0 / 468.0}},
        {"counterexample_min_eigenvalue", {0.0}},
        {"counterexample_min_pt_eigenvalue", {0.0}},
        {"theorem2_rhs", {2048.0 / 9.0}},
        {"theorem2_equal_weight_lhs", {81.0 / (256.0 * 256.0 * 256.0) + 2.0}},
        {"corollary1_n3_sides", {62.0, 81.0 / std::pow(2.0, 1.5)}},
        {"tarazaga_identity_margin", {4.0 - 2.0 * std::sqrt(3.0)}},
    };
}

/// Adds 1 to the first value of `name`. Returns false if no such entry.
inline bool corrupt_golden(GoldenTable &goldens, const std::string &name) {
    auto it = goldens.find(name);
    if (it == goldens.end() || it->second.empty()) {
        return false;
    }
    it->second.front() += 1.0;
    return true;
}

struct SelftestResult {
    std::vector<std::string> passed;
    std::optional<std::string> failed_check;
    std::string detail;

    bool ok() const noexcept { return !failed_check.has_value(); }
};

namespace detail {

inline bool close_all(const std::vector<double> &got, const std::vector<double> &want, double tol) {
    if (got.size() != want.size()) {
        return false;
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
        if (!(std::abs(got[i] - want[i]) <= tol)) {
            return false;
        }
    }
    return true;
}

inline std::string describe(const std::vector<double> &v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(v[i]);
    }
    return out + "}";
}

}  // namespace detail

/// Runs every golden check in a fixed order and stops at the first failure.
inline SelftestResult run_selftest(const GoldenTable &goldens = default_goldens()) {
    using Values = std::vector<double>;
    const BipartiteDims qubits = BipartiteDims::qubits();

    auto bell = [] {
        return CMatrix{{0.5, 0.0, 0.0, 0.5}, {0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}, {0.5, 0.0, 0.0, 0.5}};
    };
    auto block_discriminants = [](const CMatrix &a) {
        return Values{a(1, 1).real() * a(2, 2).real(), std::norm(a(1, 2)), a(0, 0).real() * a(3, 3).real(),
                      std::norm(a(0, 3))};
    };

    struct Check {
        const char *name;
        double tol;
        std::function<Values()> compute;
    };
    const std::vector<Check> checks{
        {"factor_p2_spectrum", 1e-10,
         [] {
             return hermitian_eigenvalues(build_factors(XParams::symmetric(1.0, 1.0, 0.5, 0.3)).p2);
         }},
        {"product_spectrum", 1e-10,
         [] {
             const FactorPair f = build_factors(XParams::symmetric(0.3, 0.2, 0.5, 0.4));
             return hermitian_eigenvalues(mul(f.p1, f.p2));
         }},
        {"product_pt_min_eigenvalue", 1e-10,
         [&] {
             const FactorPair f = build_factors(XParams::symmetric(0.3, 0.2, 0.5, 0.4));
             return Values{min_eigenvalue(partial_transpose(mul(f.p1, f.p2), qubits))};
         }},
        {"gap_spectrum", 1e-10,
         [] { return family_gap(XParams::symmetric(0.1, 0.4, 0.5, 0.2)).eigenvalues; }},
        {"equal_weight_gap_norm", 1e-14,
         [] { return Values{family_gap(XParams::symmetric(0.25, 0.25, {0.6, 0.2}, {-0.1, 0.3})).frobenius}; }},
        {"bell_min_pt_eigenvalue", 1e-10,
         [&] { return Values{min_eigenvalue(partial_transpose(bell(), qubits))}; }},
        {"bell_concurrence", 1e-12, [&] { return Values{concurrence(*as_x_matrix(bell()))}; }},
        {"counterexample_trace", 1e-14, [] { return Values{trace(counterexample_state()).real()}; }},
        {"counterexample_block_discriminants", 1e-15,
         [&] { return block_discriminants(counterexample_state()); }},
        {"counterexample_min_eigenvalue", 1e-12, [] { return Values{min_eigenvalue(counterexample_state())}; }},
        {"counterexample_min_pt_eigenvalue", 1e-12,
         [&] { return Values{min_eigenvalue(partial_transpose(counterexample_state(), qubits))}; }},
        {"theorem2_rhs", 1e-12, [] { return Values{theorem2_sides(1.0, 1.0).rhs}; }},
        {"theorem2_equal_weight_lhs", 1e-12,
         [] {
             const CMatrix p1 = Complex(0.25) * CMatrix::identity(4);
             return Values{theorem2_check(p1, CMatrix::identity(4)).sides.lhs};
         }},
        {"corollary1_n3_sides", 1e-9,
         [] {
             const CMatrix id = CMatrix::identity(9);
             const DeterminantCheck c = corollary1_check(id, id, {3, 3});
             return Values{c.sides.lhs, c.sides.rhs};
         }},
        {"tarazaga_identity_margin", 1e-12,
         [] {
             const CMatrix id = CMatrix::identity(4);
             if (!tarazaga_pd(id)) {
                 return Values{};
             }
             return Values{trace(id).real() - std::sqrt(3.0) * frobenius_norm(id)};
         }},
    };

    SelftestResult result;
    for (const Check &check : checks) {
        const auto it = goldens.find(check.name);
        Values got;
        std::string error;
        try {
            got = check.compute();
        } catch (const std::exception &e) {
            error = e.what();
        }
        if (it == goldens.end() || !error.empty() || !detail::close_all(got, it->second, check.tol)) {
            result.failed_check = check.name;
            if (it == goldens.end()) {
                result.detail = "no golden value";
            } else if (!error.empty()) {
                result.detail = error;
            } else {
                result.detail = "got " + detail::describe(got) + ", expected " + detail::describe(it->second);
            }
            return result;
        }
        result.passed.emplace_back(check.name);
    }

    // Structural claims with no numeric golden.
    const double ce_gap = frobenius_norm(counterexample_gap());
    if (!(ce_gap > 1e-3)) {
        result.failed_check = "counterexample_gap_nonzero";
        result.detail = "gap norm " + std::to_string(ce_gap);
        return result;
    }
    result.passed.emplace_back("counterexample_gap_nonzero");
    if (!ppt_verdict(counterexample_state(), qubits)) {
        result.failed_check = "counterexample_ppt";
        result.detail = "counterexample state should be PPT";
        return result;
    }
    result.passed.emplace_back("counterexample_ppt");
    return result;
}

}  // namespace pteq

#endif  // PTEQ_SELFTEST_HPP
