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

#ifndef PTEQ_LINALG_HPP
#define PTEQ_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pteq {

using Complex = std::complex<double>;

/// Tolerance used for Hermiticity and PSD decisions when the caller does not
/// supply one.
inline constexpr double kDefaultTol = 1e-10;

/// Jacobi sweeps stop once every off-diagonal magnitude falls below this
/// fraction of the input's Frobenius norm.
inline constexpr double kJacobiRelativeTol = 1e-13;

class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class NonFiniteError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the Hermitian eigensolver. Carries the entry pair (row, col) with
/// the largest deviation |a[row][col] - conj(a[col][row])|.
class NotHermitianError : public std::invalid_argument {
   public:
    NotHermitianError(std::size_t row, std::size_t col, double deviation)
        : std::invalid_argument("matrix is not Hermitian: entries (" + std::to_string(row) + "," +
                                std::to_string(col) + ") and (" + std::to_string(col) + "," +
                                std::to_string(row) + ") differ from conjugate symmetry by " +
                                std::to_string(deviation)),
          row_(row),
          col_(col),
          deviation_(deviation) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }
    double deviation() const noexcept { return deviation_; }

   private:
    std::size_t row_;
    std::size_t col_;
    double deviation_;
};

inline bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Dense square complex matrix, row-major. Every entry is finite.
class CMatrix {
   public:
    /// Zero matrix of order `dim`.
    explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
        if (dim == 0) {
            throw DimensionError("matrix dimension must be at least 1");
        }
    }

    CMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
        if (dim == 0) {
            throw DimensionError("matrix dimension must be at least 1");
        }
        if (data_.size() != dim * dim) {
            throw DimensionError("expected " + std::to_string(dim * dim) + " entries for a " +
                                 std::to_string(dim) + "x" + std::to_string(dim) + " matrix, got " +
                                 std::to_string(data_.size()));
        }
        for (std::size_t k = 0; k < data_.size(); ++k) {
            if (!is_finite(data_[k])) {
                throw NonFiniteError("non-finite entry at (" + std::to_string(k / dim) + "," +
                                     std::to_string(k % dim) + ")");
            }
        }
    }

    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
        : CMatrix(rows.size(), flatten(rows)) {}

    static CMatrix identity(std::size_t dim) {
        CMatrix out(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            out.data_[i * dim + i] = 1.0;
        }
        return out;
    }

    static CMatrix diagonal(std::span<const Complex> diag) {
        CMatrix out(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) {
            out.set(i, i, diag[i]);
        }
        return out;
    }

    std::size_t dim() const noexcept { return dim_; }

    Complex operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    void set(std::size_t row, std::size_t col, Complex value) {
        if (!is_finite(value)) {
            throw NonFiniteError("non-finite value assigned at (" + std::to_string(row) + "," +
                                 std::to_string(col) + ")");
        }
        data_.at(row * dim_ + col) = value;
    }

    std::span<const Complex> entries() const noexcept { return data_; }

    friend bool operator==(const CMatrix &, const CMatrix &) = default;

    friend CMatrix operator+(const CMatrix &a, const CMatrix &b) { return zip(a, b, std::plus<>{}); }
    friend CMatrix operator-(const CMatrix &a, const CMatrix &b) { return zip(a, b, std::minus<>{}); }

    friend CMatrix operator*(Complex s, const CMatrix &a) {
        CMatrix out = a;
        for (auto &z : out.data_) {
            z *= s;
        }
        return out;
    }

   private:
    static std::vector<Complex> flatten(std::initializer_list<std::initializer_list<Complex>> rows) {
        std::vector<Complex> flat;
        flat.reserve(rows.size() * rows.size());
        for (const auto &row : rows) {
            if (row.size() != rows.size()) {
                throw DimensionError("matrix literal is not square");
            }
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return flat;
    }

    template <typename Op>
    static CMatrix zip(const CMatrix &a, const CMatrix &b, Op op) {
        if (a.dim_ != b.dim_) {
            throw DimensionError("incompatible operands: " + std::to_string(a.dim_) + "x" +
                                 std::to_string(a.dim_) + " and " + std::to_string(b.dim_) + "x" +
                                 std::to_string(b.dim_));
        }
        CMatrix out(a.dim_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) {
            out.data_[k] = op(a.data_[k], b.data_[k]);
        }
        return out;
    }

    std::size_t dim_;
    std::vector<Complex> data_;
};

inline std::ostream &operator<<(std::ostream &out, const CMatrix &a) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out << (j == 0 ? "[" : ", ") << a(i, j);
        }
        out << "]" << (i + 1 == a.dim() ? "]" : "\n");
    }
    return out;
}

inline CMatrix mul(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("cannot multiply " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                             " by " + std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
    }
    const std::size_t d = a.dim();
    std::vector<Complex> out(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < d; ++j) {
                out[i * d + j] += aik * b(k, j);
            }
        }
    }
    return CMatrix(d, std::move(out));
}

inline CMatrix dagger(const CMatrix &a) {
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out.set(i, j, std::conj(a(j, i)));
        }
    }
    return out;
}

inline CMatrix transpose(const CMatrix &a) {
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out.set(i, j, a(j, i));
        }
    }
    return out;
}

inline Complex trace(const CMatrix &a) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += a(i, i);
    }
    return sum;
}

/// Determinant by LU decomposition with partial pivoting. Singular input
/// yields exactly zero.
inline Complex det(const CMatrix &a) {
    const std::size_t d = a.dim();
    std::vector<Complex> lu(a.entries().begin(), a.entries().end());
    Complex result = 1.0;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        double best = std::abs(lu[col * d + col]);
        for (std::size_t row = col + 1; row < d; ++row) {
            const double mag = std::abs(lu[row * d + col]);
            if (mag > best) {
                best = mag;
                pivot = row;
            }
        }
        if (best == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            std::swap_ranges(lu.begin() + static_cast<std::ptrdiff_t>(pivot * d),
                             lu.begin() + static_cast<std::ptrdiff_t>(pivot * d + d),
                             lu.begin() + static_cast<std::ptrdiff_t>(col * d));
            result = -result;
        }
        const Complex diag = lu[col * d + col];
        result *= diag;
        for (std::size_t row = col + 1; row < d; ++row) {
            const Complex factor = lu[row * d + col] / diag;
            if (factor == Complex(0.0)) {
                continue;
            }
            for (std::size_t k = col + 1; k < d; ++k) {
                lu[row * d + k] -= factor * lu[col * d + k];
            }
        }
    }
    return result;
}

inline double frobenius_norm(const CMatrix &a) {
    double sum = 0.0;
    for (const Complex &z : a.entries()) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

/// Largest |a[i][j] - conj(a[j][i])| over all entry pairs, with its location.
struct HermiticityDefect {
    double deviation = 0.0;
    std::size_t row = 0;
    std::size_t col = 0;
};

inline HermiticityDefect hermiticity_defect(const CMatrix &a) {
    HermiticityDefect worst;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            const double dev = std::abs(a(i, j) - std::conj(a(j, i)));
            if (dev > worst.deviation) {
                worst = {dev, i, j};
            }
        }
    }
    return worst;
}

inline bool is_hermitian(const CMatrix &a, double tol = kDefaultTol) {
    return hermiticity_defect(a).deviation <= tol;
}

/// All eigenvalues of a Hermitian matrix, in descending order, with
/// multiplicity.
///
/// Cyclic Jacobi: each rotation first removes the phase of a[p][q] with a
/// diagonal unitary, then applies the real symmetric rotation that zeroes it.
/// Throws NotHermitianError when the input is not Hermitian within `tol`.
inline std::vector<double> hermitian_eigenvalues(const CMatrix &a, double tol = kDefaultTol) {
    const HermiticityDefect defect = hermiticity_defect(a);
    if (defect.deviation > tol) {
        throw NotHermitianError(defect.row, defect.col, defect.deviation);
    }

    const std::size_t d = a.dim();
    // Work on the Hermitian part so the rotations see exact conjugate symmetry.
    std::vector<Complex> m(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            m[i * d + j] = 0.5 * (a(i, j) + std::conj(a(j, i)));
        }
    }
    auto at = [&](std::size_t i, std::size_t j) -> Complex & { return m[i * d + j]; };

    const double threshold = kJacobiRelativeTol * frobenius_norm(a);
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                off = std::max(off, std::abs(at(p, q)));
            }
        }
        if (off < threshold || off == 0.0) {
            break;
        }
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const Complex apq = at(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                const Complex phase = std::conj(apq) / mag;  // e^{-i arg apq}
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // U = D R with D = diag(.., 1 at p, phase at q, ..).
                const Complex upp = c;
                const Complex upq = s;
                const Complex uqp = -s * phase;
                const Complex uqq = c * phase;

                for (std::size_t k = 0; k < d; ++k) {
                    const Complex akp = at(k, p);
                    const Complex akq = at(k, q);
                    at(k, p) = akp * upp + akq * uqp;
                    at(k, q) = akp * upq + akq * uqq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex apk = at(p, k);
                    const Complex aqk = at(q, k);
                    at(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    at(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                at(p, p) = at(p, p).real();
                at(q, q) = at(q, q).real();
            }
        }
    }

    std::vector<double> eigenvalues(d);
    for (std::size_t i = 0; i < d; ++i) {
        eigenvalues[i] = at(i, i).real();
    }
    std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>{});
    return eigenvalues;
}

inline double min_eigenvalue(const CMatrix &a, double tol = kDefaultTol) {
    return hermitian_eigenvalues(a, tol).back();
}

/// Hermitian within `tol` and no eigenvalue below -tol. Never throws.
inline bool is_psd(const CMatrix &a, double tol = kDefaultTol) {
    if (!is_hermitian(a, tol)) {
        return false;
    }
    return min_eigenvalue(a, tol) >= -tol;
}

}  // namespace pteq

#endif  // PTEQ_LINALG_HPP
