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

#include "spinor3/ks_covariance.h"

#include <cmath>
#include <stdexcept>

#include "spinor3/errors.h"
#include "spinor3/gauge_fixing.h"
#include "spinor3/pauli.h"
#include "spinor3/rotation_algebra.h"

namespace spinor3 {

namespace {

constexpr double kZeroNorm2 = 1e-300;
constexpr double kFrameTolerance = 1e-9;

NormalizedKS from_rotation(const SpinorRotation &r, double scale) {
    return NormalizedKS::from_unit(r.as_quadruple(), scale);
}

// max |B (m . sigma) B^{-1} + n . sigma|.
double conjugation_residual(const SpinorRotation &b, const Vector3 &m, const Vector3 &n) {
    ComplexMatrix2 bm = su2_matrix(b);
    return (bm * pauli_dot(m) * bm.adjoint() + pauli_dot(n)).max_abs();
}

void require_unit_axis(const Vector3 &A) {
    if (!A.is_finite() || std::abs(A.norm() - 1.0) > kFrameTolerance) {
        throw std::invalid_argument("KS frame: axis A must be a unit vector");
    }
}

}  // namespace

NormalizedKS NormalizedKS::from_unit(const KSQuadruple &u, double scale) {
    if (!u.is_finite() || std::abs(u.norm2() - 1.0) > kUnitTolerance) {
        throw std::invalid_argument("NormalizedKS: quadruple must have unit norm");
    }
    if (!std::isfinite(scale) || scale <= 0.0) {
        throw std::invalid_argument("NormalizedKS: scale must be positive");
    }
    double k = 1.0 / std::sqrt(u.norm2());
    return NormalizedKS(KSQuadruple(k * u.q4(), k * u.q1(), k * u.q2(), k * u.q3()), scale);
}

KSQuadruple NormalizedKS::denormalized() const {
    double k = std::sqrt(scale_);
    return KSQuadruple(k * u_.q4(), k * u_.q1(), k * u_.q2(), k * u_.q3());
}

NormalizedKS normalize_ks(const KSQuadruple &q) {
    if (!q.is_finite()) {
        throw std::invalid_argument("normalize_ks: components must be finite");
    }
    double n2 = q.norm2();
    if (n2 < kZeroNorm2) {
        throw DegenerateInputError("normalize_ks: quadruple is zero");
    }
    double k = 1.0 / std::sqrt(n2);
    return NormalizedKS::from_unit(KSQuadruple(k * q.q4(), k * q.q1(), k * q.q2(), k * q.q3()), n2);
}

NormalizedKS hat(const NormalizedKS &u) {
    return from_rotation(hat(u.as_rotation()), u.scale());
}

Vector3 direction_from_ks(const NormalizedKS &u) {
    const KSQuadruple &q = u.u();
    double u1 = q.q1(), u2 = q.q2(), u3 = q.q3(), u4 = q.q4();
    return {2.0 * (u1 * u3 + u2 * u4), 2.0 * (u1 * u4 - u2 * u3), u1 * u1 + u2 * u2 - u3 * u3 - u4 * u4};
}

Rotation4 transport_matrix(const SpinorRotation &c) {
    double c4 = c.c4(), c1 = c.c()[0], c2 = c.c()[1], c3 = c.c()[2];
    Matrix4 m({{
        {c4, -c1, -c2, -c3},
        {c1, c4, -c3, c2},
        {c2, c3, c4, -c1},
        {c3, -c2, c1, c4},
    }});
    return Rotation4::from_matrix(m, kFrameTolerance);
}

NormalizedKS left_transport(const SpinorRotation &c, const NormalizedKS &u) {
    KSQuadruple u_hat_prime = transport_matrix(c) * hat(u).u();
    return hat(NormalizedKS::from_unit(u_hat_prime, u.scale()));
}

NormalizedKS left_transport_unhatted(const SpinorRotation &c, const NormalizedKS &u) {
    return NormalizedKS::from_unit(su2_real4(c) * u.u(), u.scale());
}

SpinorRotation align_rotation(const Vector3 &A) {
    require_unit_axis(A);
    try {
        return canonical_phase_plus(psi_from_direction(A)).solution.c;
    } catch (const SingularGaugeError &) {
        throw SingularAxisError("align_rotation: no canonical alignment for A = (0, 0, -1)");
    }
}

KSFrame build_frame(const NormalizedKS &u, const Vector3 &A, double phase) {
    return build_frame(u, A, phase, align_rotation(A));
}

KSFrame build_frame(const NormalizedKS &u, const Vector3 &A, double phase, const SpinorRotation &align) {
    require_unit_axis(A);
    if (max_abs_diff(so3_from_rotation(align) * A, Vector3(0.0, 0.0, 1.0)) > kFrameTolerance) {
        throw std::invalid_argument("build_frame: align rotation does not take A to (0, 0, 1)");
    }
    SpinorRotation w_hat = compose(compose(hat(u.as_rotation()), sigma3_phase(phase)), align);
    return KSFrame{from_rotation(hat(w_hat), u.scale()), A, phase, align};
}

double frame_identity_residual(const KSFrame &frame, const Vector3 &n) {
    return conjugation_residual(hat(frame.w.as_rotation()), frame.A, n);
}

SpinorRotation frame_symmetry(const NormalizedKS &u, const KSFrame &frame) {
    SpinorRotation ue = compose(hat(u.as_rotation()), sigma3_phase(frame.alpha_minus_beta));
    SpinorRotation c = compose(compose(ue, frame.align), conjugate(ue));
    SpinorRotation w_hat = hat(frame.w.as_rotation());
    SpinorRotation reached = compose(c, ue);
    if (max_abs_diff(reached, w_hat) > kFrameTolerance && max_abs_diff(reached.negated(), w_hat) > kFrameTolerance) {
        throw std::invalid_argument("frame_symmetry: frame was not built over this quadruple");
    }
    return c;
}

Vector3 rotated_direction(const KSFrame &frame, const Vector3 &n) {
    Rotation3 o_w = so3_from_rotation(hat(frame.w.as_rotation()));
    return (o_w * so3_from_rotation(frame.align) * o_w.inverse()) * n;
}

double rotated_direction_residual(const KSFrame &frame, const Vector3 &n_prime) {
    return conjugation_residual(hat(frame.w.as_rotation()), Vector3(0.0, 0.0, 1.0), n_prime);
}

double hopf_direction_residual(const NormalizedKS &u) {
    return conjugation_residual(hat(u.as_rotation()), Vector3(0.0, 0.0, 1.0), direction_from_ks(u));
}

}  // namespace spinor3
