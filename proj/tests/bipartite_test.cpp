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

#include "pteq/bipartite.hpp"

#include "gtest/gtest.h"

#include "test_support.hpp"

using namespace pteq;
using pteq::testing::Rng;

namespace {

/// Index-form reference: result[(i,j),(k,l)] = a[(i,l),(k,j)], enumerated over
/// composite indices directly.
CMatrix pt_second_by_enumeration(const CMatrix &a, std::size_t m, std::size_t n) {
    CMatrix out(a.dim());
    for (std::size_t row = 0; row < m * n; ++row) {
        for (std::size_t col = 0; col < m * n; ++col) {
            const std::size_t i = row / n, j = row % n, k = col / n, l = col % n;
            out.set(row, col, a(i * n + l, k * n + j));
        }
    }
    return out;
}

}  // namespace

TEST(bipartite_dims, validation) {
    EXPECT_THROW(BipartiteDims(1, 4), DimensionError);
    EXPECT_THROW(BipartiteDims(4, 1), DimensionError);
    EXPECT_EQ(BipartiteDims(2, 3).dim(), 6u);
    EXPECT_EQ(BipartiteDims::qubits(), BipartiteDims(2, 2));
}

TEST(partial_transpose, maximally_mixed_fixed) {
    const CMatrix mixed = Complex(0.25) * CMatrix::identity(4);
    EXPECT_EQ(partial_transpose(mixed, {2, 2}), mixed);
}

TEST(partial_transpose, family_product_to_swapped_antidiagonal) {
    const double t1 = 0.3, t2 = 0.2;
    const Complex v1(0.4, 0.3), v2(-0.1, 0.6);
    const CMatrix product = pteq::testing::family_product_literal(t1, t2, v1, v2);
    const CMatrix want{{t1, 0, 0, t2 * v2},
                       {0, t2, t1 * v1, 0},
                       {0, t1 * std::conj(v1), t2, 0},
                       {t2 * std::conj(v2), 0, 0, t1}};
    EXPECT_EQ(partial_transpose(product, {2, 2}), want);
}

TEST(partial_transpose, factor_p2_swaps_v1_v2) {
    const Complex v1(0.4, 0.3), v2(-0.1, 0.6);
    const CMatrix p2{{1, 0, 0, v1}, {0, 1, v2, 0}, {0, std::conj(v2), 1, 0}, {std::conj(v1), 0, 0, 1}};
    const CMatrix want{{1, 0, 0, v2}, {0, 1, v1, 0}, {0, std::conj(v1), 1, 0}, {std::conj(v2), 0, 0, 1}};
    EXPECT_EQ(partial_transpose(p2, {2, 2}), want);
}

TEST(partial_transpose, block_convention_2x2) {
    // [[A, B], [B^dag, C]] -> [[A^T, B^T], [(B^dag)^T, C^T]]
    Rng rng(20);
    const CMatrix rho = rng.hermitian(4);
    const CMatrix got = partial_transpose(rho, {2, 2});
    for (std::size_t bi = 0; bi < 2; ++bi) {
        for (std::size_t bk = 0; bk < 2; ++bk) {
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) {
                    EXPECT_EQ(got(2 * bi + r, 2 * bk + c), rho(2 * bi + c, 2 * bk + r));
                }
            }
        }
    }
}

TEST(partial_transpose, matches_index_enumeration) {
    Rng rng(21);
    for (auto [m, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}, {2u, 4u}, {4u, 4u}}) {
        const CMatrix a = rng.matrix(m * n);
        EXPECT_EQ(partial_transpose(a, {m, n}), pt_second_by_enumeration(a, m, n));
    }
}

TEST(partial_transpose, dimension_mismatch) {
    EXPECT_THROW(partial_transpose(CMatrix(4), {2, 3}), DimensionError);
    EXPECT_THROW(pt_first(CMatrix(5), {2, 2}), DimensionError);
}

TEST(pt_first, identity_fixed) { EXPECT_EQ(pt_first(CMatrix::identity(4), {2, 2}), CMatrix::identity(4)); }

TEST(pt_first, equals_transpose_of_second) {
    Rng rng(22);
    for (auto [m, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 4u}}) {
        const CMatrix rho = rng.hermitian(m * n);
        EXPECT_EQ(pt_first(rho, {m, n}), transpose(partial_transpose(rho, {m, n})));
        const CMatrix a = rng.matrix(m * n);
        EXPECT_EQ(pt_first(a, {m, n}), transpose(partial_transpose(a, {m, n})));
        // Conjugating by the full transpose maps the second-subsystem
        // transpose to itself, not to the first-subsystem one.
        EXPECT_EQ(transpose(partial_transpose(transpose(a), {m, n})), partial_transpose(a, {m, n}));
    }
}

TEST(pt_first, same_spectrum_as_second_for_hermitian) {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const CMatrix rho = rng.hermitian(6);
        const auto a = hermitian_eigenvalues(pt_first(rho, {2, 3}));
        const auto b = hermitian_eigenvalues(partial_transpose(rho, {2, 3}));
        EXPECT_LE(pteq::testing::max_abs_diff(a, b), 1e-10);
    }
}

TEST(partial_transpose_properties, involution_trace_hermiticity_linearity) {
    Rng rng(24);
    for (auto [m, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 3u}, {2u, 5u}}) {
        const BipartiteDims dims(m, n);
        for (int trial = 0; trial < 25; ++trial) {
            const CMatrix a = rng.matrix(dims.dim());
            const CMatrix b = rng.matrix(dims.dim());
            EXPECT_EQ(partial_transpose(partial_transpose(a, dims), dims), a);
            EXPECT_EQ(pt_first(pt_first(a, dims), dims), a);
            EXPECT_EQ(trace(partial_transpose(a, dims)), trace(a));

            const CMatrix h = rng.hermitian(dims.dim());
            const CMatrix ph = partial_transpose(h, dims);
            EXPECT_EQ(dagger(ph), ph);

            // Entry permutation commutes with entrywise arithmetic exactly.
            const Complex alpha = rng.complex_normal(), beta = rng.complex_normal();
            const CMatrix lhs = partial_transpose(alpha * a + beta * b, dims);
            const CMatrix rhs = alpha * partial_transpose(a, dims) + beta * partial_transpose(b, dims);
            EXPECT_EQ(lhs, rhs);
        }
    }
}
