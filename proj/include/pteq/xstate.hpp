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

#ifndef PTEQ_XSTATE_HPP
#define PTEQ_XSTATE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "pteq/linalg.hpp"

namespace pteq {

class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// |v| may exceed 1 by this much before it is rejected, so that unit-modulus
/// values built from a phase (cos, sin) are still accepted.
inline constexpr double kModulusSlack = 1e-12;

/// Trace tolerance for operations that require a normalized state.
inline constexpr double kStateTraceTol = 1e-9;

/// Parameters of the factor pair
///
///   P1 = diag(t1, t2, t3, t4)        P2 = [ 1    0    0    v1 ]
///                                         [ 0    1    v2   0  ]
///                                         [ 0    v2*  1    0  ]
///                                         [ v1*  0    0    1  ]
///
/// Both factors are PSD exactly when every t is nonnegative and |v1|, |v2| <= 1.
struct XParams {
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;
    double t4 = 0.0;
    Complex v1 = 0.0;
    Complex v2 = 0.0;

    /// The Hermitian family: t3 = t2 and t4 = t1.
    static XParams symmetric(double t1, double t2, Complex v1, Complex v2) { return {t1, t2, t2, t1, v1, v2}; }

    bool is_symmetric() const noexcept { return t3 == t2 && t4 == t1; }

    void validate() const {
        const std::array<std::pair<const char *, double>, 4> ts{{{"t1", t1}, {"t2", t2}, {"t3", t3}, {"t4", t4}}};
        for (const auto &[name, t] : ts) {
            if (!std::isfinite(t) || t < 0.0) {
                throw ValidationError(std::string(name) + " must be a finite nonnegative real, got " +
                                      std::to_string(t));
            }
        }
        if (!is_finite(v1) || std::abs(v1) > 1.0 + kModulusSlack) {
            throw ValidationError("|v1| must be at most 1, got " + std::to_string(std::abs(v1)));
        }
        if (!is_finite(v2) || std::abs(v2) > 1.0 + kModulusSlack) {
            throw ValidationError("|v2| must be at most 1, got " + std::to_string(std::abs(v2)));
        }
    }
};

/// Two-qubit X-shaped Hermitian matrix: nonzero entries only on the diagonal
/// and the antidiagonal. c14 sits at (1,4) and c23 at (2,3) (one-based); the
/// lower antidiagonal holds their conjugates.
struct XMatrix {
    double d11 = 0.0;
    double d22 = 0.0;
    double d33 = 0.0;
    double d44 = 0.0;
    Complex c14 = 0.0;
    Complex c23 = 0.0;

    double trace() const noexcept { return d11 + d22 + d33 + d44; }

    CMatrix to_matrix() const {
        return CMatrix{{d11, 0.0, 0.0, c14},
                       {0.0, d22, c23, 0.0},
                       {0.0, std::conj(c23), d33, 0.0},
                       {std::conj(c14), 0.0, 0.0, d44}};
    }

    XMatrix scaled(double s) const { return {s * d11, s * d22, s * d33, s * d44, s * c14, s * c23}; }

    /// Both 2x2 blocks PSD within `tol`.
    bool is_psd(double tol = kDefaultTol) const {
        return d11 >= -tol && d22 >= -tol && d33 >= -tol && d44 >= -tol &&
               d22 * d33 >= std::norm(c23) - tol && d11 * d44 >= std::norm(c14) - tol;
    }

    bool is_state(double tol = kDefaultTol) const { return is_psd(tol) && std::abs(trace() - 1.0) <= tol; }
};

/// Recognizes an X-shaped Hermitian 4x4 matrix: every entry off the diagonal
/// and antidiagonal vanishes within `tol`, and the matrix is Hermitian within
/// `tol`. The returned XMatrix takes diagonals' real parts and the upper
/// antidiagonal.
inline std::optional<XMatrix> as_x_matrix(const CMatrix &a, double tol = kDefaultTol) {
    if (a.dim() != 4 || !is_hermitian(a, tol)) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i != j && i + j != 3 && std::abs(a(i, j)) > tol) {
                return std::nullopt;
            }
        }
    }
    return XMatrix{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(), a(3, 3).real(), a(0, 3), a(1, 2)};
}

struct FactorPair {
    CMatrix p1;
    CMatrix p2;
};

inline FactorPair build_factors(const XParams &params) {
    params.validate();
    const std::array<Complex, 4> diag{params.t1, params.t2, params.t3, params.t4};
    CMatrix p2 = CMatrix::identity(4);
    p2.set(0, 3, params.v1);
    p2.set(3, 0, std::conj(params.v1));
    p2.set(1, 2, params.v2);
    p2.set(2, 1, std::conj(params.v2));
    return {CMatrix::diagonal(diag), std::move(p2)};
}

/// P1 * P2 as an XMatrix. Only the symmetric family (t3 = t2, t4 = t1) gives a
/// Hermitian product; anything else is rejected.
inline XMatrix product_state(const XParams &params) {
    params.validate();
    if (!params.is_symmetric()) {
        throw ValidationError(
            "P1*P2 is Hermitian and PSD only when t1 = t4 and t2 = t3; got t1=" + std::to_string(params.t1) +
            " t2=" + std::to_string(params.t2) + " t3=" + std::to_string(params.t3) +
            " t4=" + std::to_string(params.t4));
    }
    return {params.t1, params.t2, params.t2, params.t1, params.t1 * params.v1, params.t2 * params.v2};
}

/// Spectrum from the two 2x2 blocks {1,4} and {2,3}, descending.
inline std::array<double, 4> x_eigenvalues(const XMatrix &x) {
    auto block = [](double a, double b, Complex c) {
        const double mean = 0.5 * (a + b);
        const double radius = std::hypot(0.5 * (a - b), std::abs(c));
        return std::pair{mean + radius, mean - radius};
    };
    const auto [o1, o2] = block(x.d11, x.d44, x.c14);
    const auto [i1, i2] = block(x.d22, x.d33, x.c23);
    std::array<double, 4> out{o1, o2, i1, i2};
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

/// Concurrence of a normalized X-state:
///   C = 2 max{0, |c23| - sqrt(d11 d44), |c14| - sqrt(d22 d33)}
inline double concurrence(const XMatrix &x) {
    if (std::abs(x.trace() - 1.0) > kStateTraceTol) {
        throw ValidationError("concurrence needs a unit-trace state, trace is " + std::to_string(x.trace()));
    }
    const double outer = std::abs(x.c23) - std::sqrt(std::max(0.0, x.d11 * x.d44));
    const double inner = std::abs(x.c14) - std::sqrt(std::max(0.0, x.d22 * x.d33));
    return 2.0 * std::max({0.0, outer, inner});
}

/// Concurrence of P1*P2 on the symmetric family, in terms of moduli only:
///   C = 2 max{0, t2|v2| - t1, t1|v1| - t2}
/// Values scale with t1 + t2; they equal the state concurrence when t1 + t2 = 1/2.
inline double family_concurrence(const XParams &params) {
    return 2.0 * std::max({0.0, params.t2 * std::abs(params.v2) - params.t1,
                           params.t1 * std::abs(params.v1) - params.t2});
}

/// Whether the family state has zero concurrence, via |v1| <= t2/t1 and
/// |v2| <= t1/t2. Falls back to the closed-form concurrence when t1 or t2 is
/// zero.
inline bool zero_concurrence_region(const XParams &params) {
    params.validate();
    if (params.t1 > 0.0 && params.t2 > 0.0) {
        return std::abs(params.v1) <= params.t2 / params.t1 && std::abs(params.v2) <= params.t1 / params.t2;
    }
    return family_concurrence(params) == 0.0;
}

}  // namespace pteq

#endif  // PTEQ_XSTATE_HPP
