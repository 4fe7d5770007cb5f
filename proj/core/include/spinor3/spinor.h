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

#include <array>
#include <complex>
#include <cstddef>

#include "spinor3/matrix.h"

namespace spinor3 {

using Complex = std::complex<double>;

/// Complex two-component column. Components are finite by construction;
/// the constructor throws std::invalid_argument otherwise.
class Spinor {
   public:
    constexpr Spinor() = default;
    Spinor(Complex c1, Complex c2);

    static constexpr Spinor zero() {
        return Spinor();
    }

    Complex c1() const {
        return c1_;
    }
    Complex c2() const {
        return c2_;
    }

    /// |c1|^2 + |c2|^2.
    double norm2() const {
        return std::norm(c1_) + std::norm(c2_);
    }

    friend Spinor operator+(const Spinor &a, const Spinor &b) {
        return Spinor(a.c1_ + b.c1_, a.c2_ + b.c2_);
    }
    friend Spinor operator-(const Spinor &a, const Spinor &b) {
        return Spinor(a.c1_ - b.c1_, a.c2_ - b.c2_);
    }
    friend Spinor operator-(const Spinor &a) {
        return Spinor(-a.c1_, -a.c2_);
    }
    friend Spinor operator*(Complex s, const Spinor &a) {
        return Spinor(s * a.c1_, s * a.c2_);
    }
    friend bool operator==(const Spinor &, const Spinor &) = default;

   private:
    Complex c1_{};
    Complex c2_{};
};

/// Largest |component difference|.
double max_abs_diff(const Spinor &a, const Spinor &b);

/// M s.
Spinor operator*(const ComplexMatrix2 &m, const Spinor &s);

/// Real Kustaanheimo-Stiefel quadruple stored as (q4, q1, q2, q3).
///
/// Storage index 0 holds q4; index k in 1..3 holds q_k. All 4 x 4 matrices in
/// the library act on this order.
class KSQuadruple {
   public:
    constexpr KSQuadruple() = default;
    constexpr KSQuadruple(double q4, double q1, double q2, double q3) : q_{q4, q1, q2, q3} {
    }
    constexpr explicit KSQuadruple(const std::array<double, 4> &storage) : q_(storage) {
    }

    constexpr double q4() const {
        return q_[0];
    }
    constexpr double q1() const {
        return q_[1];
    }
    constexpr double q2() const {
        return q_[2];
    }
    constexpr double q3() const {
        return q_[3];
    }
    /// Storage-order access.
    constexpr double operator[](std::size_t i) const {
        return q_[i];
    }
    constexpr const std::array<double, 4> &storage() const {
        return q_;
    }

    constexpr double norm2() const {
        return q_[0] * q_[0] + q_[1] * q_[1] + q_[2] * q_[2] + q_[3] * q_[3];
    }
    bool is_finite() const;

    friend constexpr bool operator==(const KSQuadruple &, const KSQuadruple &) = default;

   private:
    std::array<double, 4> q_{};
};

double max_abs_diff(const KSQuadruple &a, const KSQuadruple &b);

inline KSQuadruple operator*(const Matrix4 &m, const KSQuadruple &q) {
    return KSQuadruple(m.apply(q.storage()));
}
inline KSQuadruple operator*(const Rotation4 &m, const KSQuadruple &q) {
    return m.matrix() * q;
}

/// c1 = q1 + i q2, c2 = q3 + i q4. Throws std::invalid_argument on non-finite input.
Spinor spinor_from_quadruple(const KSQuadruple &q);

/// Inverse of spinor_from_quadruple; exact.
KSQuadruple quadruple_from_spinor(const Spinor &s);

/// Real part a_j and imaginary part x_j of the complex 3-vector built from
/// eta (x) eta.
struct EtaProjection {
    Vector3 a;
    Vector3 x;
};

}  // namespace spinor3
