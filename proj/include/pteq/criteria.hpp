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

#ifndef PTEQ_CRITERIA_HPP
#define PTEQ_CRITERIA_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pteq/bipartite.hpp"
#include "pteq/linalg.hpp"
#include "pteq/xstate.hpp"

namespace pteq {

/// A factor pair does not satisfy (P1 P2)^G = P1^G P2^G, which the
/// determinant inequalities assume.
class HypothesisError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A matrix handed to a state-level operation is not a density matrix.
/// `check()` is one of "hermitian", "psd", "trace".
class InvalidStateError : public std::invalid_argument {
   public:
    InvalidStateError(std::string check, const std::string &detail)
        : std::invalid_argument("not a density matrix: " + check + " check failed (" + detail + ")"),
          check_(std::move(check)) {}

    const std::string &check() const noexcept { return check_; }

   private:
    std::string check_;
};

/// (P1 P2)^G - P1^G P2^G
inline CMatrix pt_gap(const CMatrix &p1, const CMatrix &p2, const BipartiteDims &dims) {
    return partial_transpose(mul(p1, p2), dims) - mul(partial_transpose(p1, dims), partial_transpose(p2, dims));
}

inline bool equality_holds(const CMatrix &p1, const CMatrix &p2, const BipartiteDims &dims,
                           double tol = kDefaultTol) {
    return frobenius_norm(pt_gap(p1, p2, dims)) <= tol;
}

/// Sufficient test for positive definiteness: Tr(A) > sqrt(d - 1) ||A||_F.
/// A false result certifies nothing.
inline bool tarazaga_pd(const CMatrix &a, double tol = kDefaultTol) {
    const HermiticityDefect defect = hermiticity_defect(a);
    if (defect.deviation > tol) {
        throw NotHermitianError(defect.row, defect.col, defect.deviation);
    }
    const double d = static_cast<double>(a.dim());
    return trace(a).real() > std::sqrt(d - 1.0) * frobenius_norm(a);
}

struct InequalitySides {
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
};

/// 81 (D1 D2)^3 + 512 D1 D2 <= 2^11 / 9
inline InequalitySides theorem2_sides(double d1, double d2) {
    const double p = d1 * d2;
    const double lhs = 81.0 * p * p * p + 512.0 * p;
    const double rhs = 2048.0 / 9.0;
    return {lhs, rhs, lhs <= rhs};
}

/// (n-1)^n (D1 D2)^3 + 2 n^n D1 D2 <= n^((3n-1)/2) / (n-1)^(n/2)
inline InequalitySides corollary1_sides(std::size_t n, double d1, double d2) {
    const double nn = static_cast<double>(n);
    const double p = d1 * d2;
    const double lhs = std::pow(nn - 1.0, nn) * p * p * p + 2.0 * std::pow(nn, nn) * p;
    const double rhs = std::pow(nn, (3.0 * nn - 1.0) / 2.0) / std::pow(nn - 1.0, nn / 2.0);
    return {lhs, rhs, lhs <= rhs};
}

struct DeterminantCheck {
    InequalitySides sides;
    double det_p1_pt = 0.0;
    double det_p2_pt = 0.0;
    /// A factor's partial transpose is singular (within tol), so the factor is
    /// only semi-definite and the inequality holds trivially.
    bool rank_deficient = false;
};

namespace detail {

inline double real_determinant(const CMatrix &a, const char *name) {
    const Complex d = det(a);
    if (std::abs(d.imag()) >= 1e-10 * std::max(1.0, std::abs(d))) {
        throw std::domain_error(std::string("determinant of ") + name + " has imaginary part " +
                                std::to_string(d.imag()));
    }
    return d.real();
}

inline DeterminantCheck determinant_check(const CMatrix &p1, const CMatrix &p2, const BipartiteDims &dims,
                                          double tol) {
    DeterminantCheck out;
    out.det_p1_pt = real_determinant(partial_transpose(p1, dims), "P1^G");
    out.det_p2_pt = real_determinant(partial_transpose(p2, dims), "P2^G");
    out.rank_deficient = std::abs(out.det_p1_pt) <= tol || std::abs(out.det_p2_pt) <= tol;
    return out;
}

}  // namespace detail

/// Determinant inequality for a two-qubit state rho = P1 P2 with
/// rho^G = P1^G P2^G. Throws HypothesisError when the gap exceeds `tol`; see
/// equality_holds.
inline DeterminantCheck theorem2_check(const CMatrix &p1, const CMatrix &p2, double tol = kDefaultTol) {
    const BipartiteDims dims = BipartiteDims::qubits();
    const double gap = frobenius_norm(pt_gap(p1, p2, dims));
    if (gap > tol) {
        throw HypothesisError("the determinant inequality needs (P1 P2)^G = P1^G P2^G, but the gap norm is " +
                              std::to_string(gap) + " (check equality_holds first)");
    }
    DeterminantCheck out = detail::determinant_check(p1, p2, dims, tol);
    out.sides = theorem2_sides(out.det_p1_pt, out.det_p2_pt);
    return out;
}

/// Higher-dimensional variant for order m*n factors with m, n >= 3. Only n
/// (the second subsystem) enters the inequality.
inline DeterminantCheck corollary1_check(const CMatrix &p1, const CMatrix &p2, const BipartiteDims &dims,
                                         double tol = kDefaultTol) {
    if (dims.m() < 3 || dims.n() < 3) {
        throw ValidationError("the m (x) n determinant inequality needs m >= 3 and n >= 3, got (" +
                              std::to_string(dims.m()) + "," + std::to_string(dims.n()) + ")");
    }
    DeterminantCheck out = detail::determinant_check(p1, p2, dims, tol);
    out.sides = corollary1_sides(dims.n(), out.det_p1_pt, out.det_p2_pt);
    return out;
}

/// Throws InvalidStateError unless rho is Hermitian, PSD and unit-trace
/// within tol.
inline void validate_density(const CMatrix &rho, double tol = kDefaultTol) {
    const HermiticityDefect defect = hermiticity_defect(rho);
    if (defect.deviation > tol) {
        throw InvalidStateError("hermitian", "entries (" + std::to_string(defect.row) + "," +
                                                 std::to_string(defect.col) + ") deviate by " +
                                                 std::to_string(defect.deviation));
    }
    const double lowest = min_eigenvalue(rho, tol);
    if (lowest < -tol) {
        throw InvalidStateError("psd", "smallest eigenvalue " + std::to_string(lowest));
    }
    const Complex tr = trace(rho);
    if (std::abs(tr - 1.0) > tol) {
        throw InvalidStateError("trace", "trace " + std::to_string(tr.real()));
    }
}

/// Positive partial transpose. For 2 (x) 2 and 2 (x) 3 this decides
/// separability; for larger systems it is only necessary.
inline bool ppt_verdict(const CMatrix &rho, const BipartiteDims &dims, double tol = kDefaultTol) {
    detail::require_conformable(rho, dims);
    validate_density(rho, tol);
    return min_eigenvalue(partial_transpose(rho, dims), tol) >= -tol;
}

// The separable X-state whose partial transpose differs from P1^G P2^G.

namespace counterexample {

inline Complex phase_vector() { return {1.0, std::sqrt(22.0)}; }

inline double a1() { return 1.0 / 9.0; }
inline double b1() { return 1.0 / 4.0; }
inline double d1() { return 23.0 / 117.0; }
inline double e1() { return 23.0 / 52.0; }
inline Complex c1() { return phase_vector() / (2.0 * std::sqrt(117.0)); }
inline Complex f1() { return phase_vector() / (6.0 * std::sqrt(13.0)); }
inline Complex c2() { return phase_vector() / (4.0 * std::sqrt(13.0)); }
inline Complex f2() { return phase_vector() / (3.0 * std::sqrt(117.0)); }

}  // namespace counterexample

inline CMatrix counterexample_state() {
    using namespace counterexample;
    return CMatrix{{a1(), 0.0, 0.0, std::conj(f1())},
                   {0.0, b1(), std::conj(c1()), 0.0},
                   {0.0, c1(), d1(), 0.0},
                   {f1(), 0.0, 0.0, e1()}};
}

/// The stated P1^G P2^G for the counterexample state.
inline CMatrix counterexample_factor_product() {
    using namespace counterexample;
    return CMatrix{{a1(), 0.0, 0.0, std::conj(f2())},
                   {0.0, b1(), std::conj(c2()), 0.0},
                   {0.0, c2(), e1(), 0.0},
                   {f2(), 0.0, 0.0, d1()}};
}

/// rho^G - P1^G P2^G for the counterexample; nonzero.
inline CMatrix counterexample_gap() {
    return partial_transpose(counterexample_state(), BipartiteDims::qubits()) - counterexample_factor_product();
}

struct GapReport {
    CMatrix gap;
    double frobenius = 0.0;
    std::vector<double> eigenvalues;
    bool equality_holds = false;
};

/// Gap matrix diagnostics for the factor pair built from `params`.
inline GapReport family_gap(const XParams &params, double tol = kDefaultTol) {
    const FactorPair factors = build_factors(params);
    GapReport out{pt_gap(factors.p1, factors.p2, BipartiteDims::qubits()), 0.0, {}, false};
    out.frobenius = frobenius_norm(out.gap);
    out.equality_holds = out.frobenius <= tol;
    if (is_hermitian(out.gap, tol)) {
        out.eigenvalues = hermitian_eigenvalues(out.gap, tol);
    }
    return out;
}

/// Everything `analyze` reports about a density matrix.
struct CriterionReport {
    double trace = 0.0;
    double hermiticity_defect = 0.0;
    double min_eigenvalue = 0.0;
    double min_pt_eigenvalue = 0.0;
    bool ppt = false;
    bool x_shaped = false;
    std::optional<double> concurrence;

    /// Present when the state is an X-state of the symmetric family, i.e.
    /// it factors as P1 P2 with recoverable (t1, t2, v1, v2).
    struct Factorization {
        XParams params;
        double gap_frobenius = 0.0;
        std::vector<double> gap_eigenvalues;
        bool equality_holds = false;
        /// Only evaluated when equality holds.
        std::optional<DeterminantCheck> theorem2;
    };
    std::optional<Factorization> factorization;
};

/// Recovers (t1, t2, v1, v2) from an X-state with d11 = d44 and d22 = d33.
inline std::optional<XParams> family_params(const XMatrix &x, double tol = kDefaultTol) {
    if (std::abs(x.d11 - x.d44) > tol || std::abs(x.d22 - x.d33) > tol) {
        return std::nullopt;
    }
    const double t1 = std::max(0.0, x.d11);
    const double t2 = std::max(0.0, x.d22);
    const Complex v1 = t1 > tol ? x.c14 / t1 : Complex(0.0);
    const Complex v2 = t2 > tol ? x.c23 / t2 : Complex(0.0);
    if (std::abs(v1) > 1.0 + kModulusSlack || std::abs(v2) > 1.0 + kModulusSlack) {
        return std::nullopt;
    }
    return XParams::symmetric(t1, t2, v1, v2);
}

inline CriterionReport analyze(const CMatrix &rho, const BipartiteDims &dims, double tol = kDefaultTol) {
    detail::require_conformable(rho, dims);
    validate_density(rho, tol);

    CriterionReport report;
    report.trace = trace(rho).real();
    report.hermiticity_defect = hermiticity_defect(rho).deviation;
    report.min_eigenvalue = min_eigenvalue(rho, tol);
    report.min_pt_eigenvalue = min_eigenvalue(partial_transpose(rho, dims), tol);
    report.ppt = report.min_pt_eigenvalue >= -tol;

    if (dims != BipartiteDims::qubits()) {
        return report;
    }
    const std::optional<XMatrix> x = as_x_matrix(rho, tol);
    if (!x) {
        return report;
    }
    report.x_shaped = true;
    report.concurrence = concurrence(*x);

    if (const std::optional<XParams> params = family_params(*x, tol)) {
        CriterionReport::Factorization f{*params, 0.0, {}, false, std::nullopt};
        const GapReport gap = family_gap(*params, tol);
        f.gap_frobenius = gap.frobenius;
        f.gap_eigenvalues = gap.eigenvalues;
        f.equality_holds = gap.equality_holds;
        if (f.equality_holds) {
            const FactorPair factors = build_factors(*params);
            f.theorem2 = theorem2_check(factors.p1, factors.p2, tol);
        }
        report.factorization = std::move(f);
    }
    return report;
}

}  // namespace pteq

#endif  // PTEQ_CRITERIA_HPP
