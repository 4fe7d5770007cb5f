// Copyright 2026 The spinor3 Authors
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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "spinor3/vector3.h"

namespace spinor3 {

/// Dense N x N real matrix, row-major, value semantics.
template <std::size_t N>
class RealMatrix {
   public:
    using Row = std::array<double, N>;
    using Column = std::array<double, N>;

    constexpr RealMatrix() = default;
    constexpr explicit RealMatrix(const std::array<Row, N> &rows) : rows_(rows) {
    }

    static constexpr RealMatrix identity() {
        RealMatrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m.rows_[i][i] = 1.0;
        }
        return m;
    }

    constexpr double operator()(std::size_t i, std::size_t j) const {
        return rows_[i][j];
    }
    constexpr double &operator()(std::size_t i, std::size_t j) {
        return rows_[i][j];
    }

    constexpr RealMatrix transpose() const {
        RealMatrix t;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                t.rows_[j][i] = rows_[i][j];
            }
        }
        return t;
    }

    constexpr Column apply(const Column &v) const {
        Column out{};
        for (std::size_t i = 0; i < N; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < N; ++j) {
                acc += rows_[i][j] * v[j];
            }
            out[i] = acc;
        }
        return out;
    }

    friend constexpr RealMatrix operator*(const RealMatrix &a, const RealMatrix &b) {
        RealMatrix p;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < N; ++k) {
                    acc += a.rows_[i][k] * b.rows_[k][j];
                }
                p.rows_[i][j] = acc;
            }
        }
        return p;
    }
    friend constexpr RealMatrix operator+(RealMatrix a, const RealMatrix &b) {
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                a.rows_[i][j] += b.rows_[i][j];
            }
        }
        return a;
    }
    friend constexpr RealMatrix operator-(RealMatrix a, const RealMatrix &b) {
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                a.rows_[i][j] -= b.rows_[i][j];
            }
        }
        return a;
    }
    friend constexpr RealMatrix operator*(double s, RealMatrix a) {
        for (auto &row : a.rows_) {
            for (auto &x : row) {
                x *= s;
            }
        }
        return a;
    }

    /// Largest |entry|.
    double max_abs() const {
        double m = 0.0;
        for (const auto &row : rows_) {
            for (double x : row) {
                m = std::max(m, std::abs(x));
            }
        }
        return m;
    }
    double frobenius_norm() const {
        double s = 0.0;
        for (const auto &row : rows_) {
            for (double x : row) {
                s += x * x;
            }
        }
        return std::sqrt(s);
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    double determinant() const {
        auto a = rows_;
        double det = 1.0;
        for (std::size_t col = 0; col < N; ++col) {
            std::size_t pivot = col;
            for (std::size_t r = col + 1; r < N; ++r) {
                if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
                    pivot = r;
                }
            }
            if (a[pivot][col] == 0.0) {
                return 0.0;
            }
            if (pivot != col) {
                std::swap(a[pivot], a[col]);
                det = -det;
            }
            det *= a[col][col];
            for (std::size_t r = col + 1; r < N; ++r) {
                double f = a[r][col] / a[col][col];
                for (std::size_t c = col; c < N; ++c) {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
        return det;
    }

    /// max |M^T M - I|.
    double orthogonality_residual() const {
        return (transpose() * *this - identity()).max_abs();
    }

    friend constexpr bool operator==(const RealMatrix &, const RealMatrix &) = default;

   private:
    std::array<Row, N> rows_{};
};

/// Solves A x = b by Gaussian elimination with partial pivoting.
/// Returns nullopt when a pivot falls below `singular_threshold`.
template <std::size_t N>
std::optional<std::array<double, N>> solve(
    const RealMatrix<N> &matrix, const std::array<double, N> &rhs, double singular_threshold = 1e-14) {
    std::array<std::array<double, N + 1>, N> a{};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            a[i][j] = matrix(i, j);
        }
        a[i][N] = rhs[i];
    }
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < N; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
                pivot = r;
            }
        }
        if (std::abs(a[pivot][col]) < singular_threshold) {
            return std::nullopt;
        }
        std::swap(a[pivot], a[col]);
        for (std::size_t r = 0; r < N; ++r) {
            if (r == col) {
                continue;
            }
            double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= N; ++c) {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    std::array<double, N> x{};
    for (std::size_t i = 0; i < N; ++i) {
        x[i] = a[i][N] / a[i][i];
    }
    return x;
}

/// Element of SO(N): orthogonal with determinant +1.
///
/// Instances are only created through `from_matrix`, which checks the group
/// conditions, or as products/inverses of existing elements.
template <std::size_t N>
class SpecialOrthogonal {
   public:
    static constexpr double kMembershipTolerance = 1e-9;

    static SpecialOrthogonal identity() {
        return SpecialOrthogonal(RealMatrix<N>::identity());
    }

    /// Throws std::invalid_argument when `m` is not in SO(N) within `tolerance`.
    static SpecialOrthogonal from_matrix(const RealMatrix<N> &m, double tolerance = kMembershipTolerance) {
        double ortho = m.orthogonality_residual();
        double det = m.determinant();
        if (!(ortho <= tolerance) || !(std::abs(det - 1.0) <= tolerance)) {
            throw std::invalid_argument(
                "matrix is not in SO(" + std::to_string(N) + "): orthogonality residual " + std::to_string(ortho) +
                ", determinant " + std::to_string(det));
        }
        return SpecialOrthogonal(m);
    }

    const RealMatrix<N> &matrix() const {
        return m_;
    }
    double operator()(std::size_t i, std::size_t j) const {
        return m_(i, j);
    }
    SpecialOrthogonal inverse() const {
        return SpecialOrthogonal(m_.transpose());
    }
    double determinant() const {
        return m_.determinant();
    }
    double orthogonality_residual() const {
        return m_.orthogonality_residual();
    }

    friend SpecialOrthogonal operator*(const SpecialOrthogonal &a, const SpecialOrthogonal &b) {
        return SpecialOrthogonal(a.m_ * b.m_);
    }

   private:
    explicit SpecialOrthogonal(const RealMatrix<N> &m) : m_(m) {
    }
    RealMatrix<N> m_;
};

using Matrix3 = RealMatrix<3>;
using Matrix4 = RealMatrix<4>;
using Rotation3 = SpecialOrthogonal<3>;
using Rotation4 = SpecialOrthogonal<4>;

inline Vector3 operator*(const Rotation3 &o, const Vector3 &v) {
    auto r = o.matrix().apply(v.components());
    return {r[0], r[1], r[2]};
}

inline Vector3 operator*(const Matrix3 &o, const Vector3 &v) {
    auto r = o.apply(v.components());
    return {r[0], r[1], r[2]};
}

/// Skew matrix with (v^x)_{kl} = -epsilon_{klj} v_j, so (v^x) w = v x w.
Matrix3 cross_matrix(const Vector3 &v);

/// Complex 2 x 2 matrix.
class ComplexMatrix2 {
   public:
    using Complex = std::complex<double>;

    constexpr ComplexMatrix2() = default;
    constexpr ComplexMatrix2(Complex m00, Complex m01, Complex m10, Complex m11) : m_{m00, m01, m10, m11} {
    }

    static constexpr ComplexMatrix2 identity() {
        return {1.0, 0.0, 0.0, 1.0};
    }

    constexpr Complex operator()(std::size_t i, std::size_t j) const {
        return m_[2 * i + j];
    }

    ComplexMatrix2 adjoint() const {
        return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
    }
    constexpr ComplexMatrix2 transpose() const {
        return {m_[0], m_[2], m_[1], m_[3]};
    }
    constexpr Complex trace() const {
        return m_[0] + m_[3];
    }
    constexpr Complex determinant() const {
        return m_[0] * m_[3] - m_[1] * m_[2];
    }
    /// Inverse via the adjugate; caller guarantees a nonzero determinant.
    ComplexMatrix2 inverse() const;

    /// Largest |entry|.
    double max_abs() const;

    friend ComplexMatrix2 operator*(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
        return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2], a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
                a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2], a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
    }
    friend ComplexMatrix2 operator+(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
        return {a.m_[0] + b.m_[0], a.m_[1] + b.m_[1], a.m_[2] + b.m_[2], a.m_[3] + b.m_[3]};
    }
    friend ComplexMatrix2 operator-(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
        return {a.m_[0] - b.m_[0], a.m_[1] - b.m_[1], a.m_[2] - b.m_[2], a.m_[3] - b.m_[3]};
    }
    friend ComplexMatrix2 operator*(Complex s, const ComplexMatrix2 &a) {
        return {s * a.m_[0], s * a.m_[1], s * a.m_[2], s * a.m_[3]};
    }
    friend bool operator==(const ComplexMatrix2 &, const ComplexMatrix2 &) = default;

   private:
    std::array<Complex, 4> m_{};
};

}  // namespace spinor3
