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

// Independent reference computations for tests. Everything here is built from
// raw complex 2x2 arithmetic and Pauli matrices, never from the library's
// closed-form formulas.

#include <array>
#include <cmath>
#include <complex>

#include "spinor3/matrix.h"
#include "spinor3/pauli.h"
#include "spinor3/spinor.h"
#include "spinor3/vector3.h"

namespace spinor3::testing {

using C = std::complex<double>;

/// Outer product a b^T (no conjugation).
inline ComplexMatrix2 outer(const Spinor &a, const Spinor &b) {
    return {a.c1() * b.c1(), a.c1() * b.c2(), a.c2() * b.c1(), a.c2() * b.c2()};
}

/// Outer product a b^+.
inline ComplexMatrix2 outer_dagger(const Spinor &a, const Spinor &b) {
    return {a.c1() * std::conj(b.c1()), a.c1() * std::conj(b.c2()), a.c2() * std::conj(b.c1()),
            a.c2() * std::conj(b.c2())};
}

/// c4 I - i (c1 sigma^1 + c2 sigma^2 + c3 sigma^3), assembled from the Pauli constants.
inline ComplexMatrix2 oracle_su2(double c4, double c1, double c2, double c3) {
    const C mi(0.0, -1.0);
    return C(c4) * ComplexMatrix2::identity() + mi * (C(c1) * kSigma1 + C(c2) * kSigma2 + C(c3) * kSigma3);
}

inline Spinor apply(const ComplexMatrix2 &m, const Spinor &s) {
    return Spinor(m(0, 0) * s.c1() + m(0, 1) * s.c2(), m(1, 0) * s.c1() + m(1, 1) * s.c2());
}

/// r = 1/2 tr(xi xi^+), x_j = 1/2 tr(sigma^j xi xi^+).
struct XiOracle {
    double r;
    Vector3 x;
};
inline XiOracle oracle_xi_projection(const Spinor &xi) {
    ComplexMatrix2 rho = outer_dagger(xi, xi);
    return {0.5 * rho.trace().real(),
            Vector3(0.5 * (kSigma1 * rho).trace().real(), 0.5 * (kSigma2 * rho).trace().real(),
                    0.5 * (kSigma3 * rho).trace().real())};
}

/// a_j + i x_j = 1/2 tr[sigma^2 sigma^j (eta eta^T)].
struct EtaOracle {
    Vector3 a;
    Vector3 x;
};
inline EtaOracle oracle_eta_projection(const Spinor &eta) {
    ComplexMatrix2 t = outer(eta, eta);
    const ComplexMatrix2 *sig[3] = {&kSigma1, &kSigma2, &kSigma3};
    EtaOracle o{};
    for (int j = 0; j < 3; ++j) {
        C z = 0.5 * (kSigma2 * *sig[j] * t).trace();
        o.a[j] = z.real();
        o.x[j] = z.imag();
    }
    return o;
}

/// Rotation by `angle` about coordinate axis `axis` (0, 1, 2), right-handed.
inline Matrix3 axis_rotation(int axis, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    Matrix3 m = Matrix3::identity();
    int i = (axis + 1) % 3, j = (axis + 2) % 3;
    m(i, i) = c;
    m(j, j) = c;
    m(i, j) = -s;
    m(j, i) = s;
    return m;
}

/// O_kl from B^+ sigma^k B = O_kl sigma^l, read off as 1/2 tr(sigma^l B^+ sigma^k B).
inline Matrix3 oracle_so3(const ComplexMatrix2 &b) {
    const ComplexMatrix2 *sig[3] = {&kSigma1, &kSigma2, &kSigma3};
    Matrix3 m;
    for (int k = 0; k < 3; ++k) {
        ComplexMatrix2 t = b.adjoint() * *sig[k] * b;
        for (int l = 0; l < 3; ++l) {
            m(k, l) = 0.5 * (*sig[l] * t).trace().real();
        }
    }
    return m;
}

inline double max_abs(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
    return (a - b).max_abs();
}

template <std::size_t N>
double max_abs(const RealMatrix<N> &a, const RealMatrix<N> &b) {
    return (a - b).max_abs();
}

}  // namespace spinor3::testing
