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

#ifndef PTEQ_BIPARTITE_HPP
#define PTEQ_BIPARTITE_HPP

#include <cstddef>
#include <string>

#include "pteq/linalg.hpp"

namespace pteq {

/// Subsystem dimensions of an m (x) n space. Row index (i, j) of the composite
/// space maps to i * n + j, so i selects an n x n block.
class BipartiteDims {
   public:
    BipartiteDims(std::size_t m, std::size_t n) : m_(m), n_(n) {
        if (m < 2 || n < 2) {
            throw DimensionError("subsystem dimensions must both be at least 2, got (" + std::to_string(m) +
                                 "," + std::to_string(n) + ")");
        }
    }

    static BipartiteDims qubits() { return {2, 2}; }

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return m_ * n_; }

    friend bool operator==(const BipartiteDims &, const BipartiteDims &) = default;

   private:
    std::size_t m_;
    std::size_t n_;
};

namespace detail {

inline void require_conformable(const CMatrix &a, const BipartiteDims &dims) {
    if (a.dim() != dims.dim()) {
        throw DimensionError("matrix of order " + std::to_string(a.dim()) + " does not match subsystem dims (" +
                             std::to_string(dims.m()) + "," + std::to_string(dims.n()) + ")");
    }
}

}  // namespace detail

/// Partial transpose over the second subsystem: every n x n block is
/// transposed in place and the block grid is left alone.
///   result[(i,j),(k,l)] = a[(i,l),(k,j)]
inline CMatrix partial_transpose(const CMatrix &a, const BipartiteDims &dims) {
    detail::require_conformable(a, dims);
    const std::size_t m = dims.m();
    const std::size_t n = dims.n();
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t l = 0; l < n; ++l) {
                    out.set(i * n + j, k * n + l, a(i * n + l, k * n + j));
                }
            }
        }
    }
    return out;
}

/// Partial transpose over the first subsystem: the block grid is transposed,
/// block contents are not. Equal to transpose(partial_transpose(a)).
///   result[(i,j),(k,l)] = a[(k,j),(i,l)]
inline CMatrix pt_first(const CMatrix &a, const BipartiteDims &dims) {
    detail::require_conformable(a, dims);
    const std::size_t m = dims.m();
    const std::size_t n = dims.n();
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t l = 0; l < n; ++l) {
                    out.set(i * n + j, k * n + l, a(k * n + j, i * n + l));
                }
            }
        }
    }
    return out;
}

}  // namespace pteq

#endif  // PTEQ_BIPARTITE_HPP
