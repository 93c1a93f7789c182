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

// Random generators and independent oracles shared by the test binaries.
// Oracles here deliberately avoid the library's code paths.

#ifndef PTEQ_TESTS_TEST_SUPPORT_HPP
#define PTEQ_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "pteq/linalg.hpp"
#include "pteq/xstate.hpp"

namespace pteq::testing {

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

    Complex complex_normal() {
        std::normal_distribution<double> g;
        return {g(engine_), g(engine_)};
    }

    /// Uniform modulus in [0, max_modulus], uniform phase.
    Complex disk(double max_modulus = 1.0) {
        return std::polar(uniform(0.0, max_modulus), uniform(0.0, 2.0 * std::numbers::pi));
    }

    CMatrix matrix(std::size_t d) {
        std::vector<Complex> e(d * d);
        for (auto &z : e) {
            z = complex_normal();
        }
        return CMatrix(d, std::move(e));
    }

    CMatrix hermitian(std::size_t d) {
        const CMatrix a = matrix(d);
        return Complex(0.5) * (a + dagger(a));
    }

    /// Symmetric-family parameters with t1, t2 in [0, 1] and |v| <= 1.
    XParams family() { return XParams::symmetric(uniform(), uniform(), disk(), disk()); }

    /// Normalized family: t1 + t2 = 1/2.
    XParams normalized_family() {
        const double t1 = uniform(0.0, 0.5);
        return XParams::symmetric(t1, 0.5 - t1, disk(), disk());
    }

    XMatrix x_matrix() {
        XMatrix x{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0),
                  complex_normal(), complex_normal()};
        return x;
    }

    std::mt19937_64 &engine() { return engine_; }

   private:
    std::mt19937_64 engine_;
};

/// Triple-loop product accumulated in i-j-k order.
inline std::vector<Complex> naive_product(const CMatrix &a, const CMatrix &b) {
    const std::size_t d = a.dim();
    std::vector<Complex> out(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                acc += a(i, k) * b(k, j);
            }
            out[i * d + j] = acc;
        }
    }
    return out;
}

/// Eigenvalues of the Hermitian 2x2 [[a, c], [c*, b]] from its characteristic
/// polynomial: (tr +- sqrt(tr^2 - 4 det)) / 2.
inline std::array<double, 2> block_eigenvalues(double a, double b, Complex c) {
    const double tr = a + b;
    const double dt = a * b - std::norm(c);
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * dt));
    return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

/// X-shaped Hermitian spectrum from the {1,4} and {2,3} blocks, descending.
inline std::vector<double> x_spectrum_oracle(const CMatrix &a) {
    const auto outer = block_eigenvalues(a(0, 0).real(), a(3, 3).real(), a(0, 3));
    const auto inner = block_eigenvalues(a(1, 1).real(), a(2, 2).real(), a(1, 2));
    std::vector<double> out{outer[0], outer[1], inner[0], inner[1]};
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

inline std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<>{});
    return v;
}

inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double worst = a.size() == b.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

inline double max_entry_diff(const CMatrix &a, const CMatrix &b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

inline CMatrix bell_state() {
    return CMatrix{{0.5, 0.0, 0.0, 0.5}, {0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}, {0.5, 0.0, 0.0, 0.5}};
}

/// P1 P2 for the symmetric family, written out entry by entry.
inline CMatrix family_product_literal(double t1, double t2, Complex v1, Complex v2) {
    return CMatrix{{t1, 0.0, 0.0, t1 * v1},
                   {0.0, t2, t2 * v2, 0.0},
                   {0.0, t2 * std::conj(v2), t2, 0.0},
                   {t1 * std::conj(v1), 0.0, 0.0, t1}};
}

}  // namespace pteq::testing

#endif  // PTEQ_TESTS_TEST_SUPPORT_HPP
