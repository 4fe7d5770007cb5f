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

#include "spinor3/angle.h"
#include "spinor3/matrix.h"
#include "spinor3/rotation.h"
#include "spinor3/rotation_algebra.h"
#include "spinor3/spinor.h"
#include "spinor3/vector3.h"

/// Unitary gauges of normalized spinors.
///
/// The (+) gauge rotates Psi to (e^{-i Gamma/2}, 0), the (-) gauge to
/// (0, e^{+i Gamma/2}). Each chart misses one pole of the direction sphere;
/// callers switch charts rather than relying on a global section.
namespace spinor3 {

/// Allowed deviation of |Psi|^2 from 1 for unit-spinor preconditions.
inline constexpr double kUnitSpinorTolerance = 1e-9;
/// u1^2 + u2^2 (resp. u3^2 + u4^2) below this makes the canonical (+)
/// (resp. (-)) phase undefined.
inline constexpr double kSingularGaugeLimit = 1e-12;

/// Psi = (sqrt(1 + n3) e^{-i gamma/2}, sqrt(1 - n3) e^{+i gamma/2}) / sqrt(2).
///
/// Off the poles `gamma` must agree with the azimuth of n modulo 2*pi (it
/// selects the sheet); at the poles it is used verbatim. Throws
/// std::invalid_argument when |n| != 1 or gamma disagrees with n.
Spinor psi_from_direction(const Vector3 &n, DoubleCoverAngle gamma);
/// Azimuth taken from n (0 at the poles) and lifted to `sheet`.
Spinor psi_from_direction(const Vector3 &n, Sheet sheet = Sheet::principal);

/// n_j = Psi^+ sigma^j Psi for a unit spinor.
Vector3 direction_of(const Spinor &psi);

struct GaugeSolution {
    /// Gamma-independent core: B(a) Psi = (1, 0) or (0, 1).
    SpinorRotation a = SpinorRotation::identity();
    /// B(c) Psi = (e^{-i Gamma/2}, 0) or (0, e^{+i Gamma/2}).
    SpinorRotation c = SpinorRotation::identity();
    double gamma = 0.0;
};

/// (+) gauge. a = (u1, u4, -u3, u2) as (a4, a1, a2, a3); c = B(cos G/2, 0, 0, sin G/2) B(a).
/// Throws DegenerateInputError for the zero spinor, std::invalid_argument for non-unit input.
GaugeSolution gauge_plus(const Spinor &psi, double gamma);

/// (-) gauge. a = (u3, u2, u1, -u4), with the same dressing as the (+) gauge.
GaugeSolution gauge_minus(const Spinor &psi, double gamma);

/// Target spinors of the two gauges.
Spinor gauge_plus_target(double gamma);
Spinor gauge_minus_target(double gamma);

struct CanonicalGauge {
    double gamma = 0.0;
    VectorParameter C;
    GaugeSolution solution;
};

/// (+) gauge with Gamma chosen so that c3 = 0: Gamma/2 = atan2(-u2, u1).
/// O(C) n = (0, 0, +1), |C| = tan(theta / 2). Throws SingularGaugeError at n = (0, 0, -1).
CanonicalGauge canonical_phase_plus(const Spinor &psi);

/// (-) gauge with c3 = 0: Gamma/2 = atan2(u4, u3).
/// O(C) n = (0, 0, -1), |C| = tan((pi - theta) / 2). Throws SingularGaugeError at n = (0, 0, +1).
CanonicalGauge canonical_phase_minus(const Spinor &psi);

/// C = (n2, -n1, 0) / (1 + n3).
VectorParameter flat_vector_parameter_plus(const Vector3 &n);
/// C = (-n2, n1, 0) / (1 - n3).
VectorParameter flat_vector_parameter_minus(const Vector3 &n);

/// The unique c with B(c) Psi = Psi'. Computed as the quaternion ratio
/// B(c^) = B(u') B(u)^{-1} followed by un-hatting.
SpinorRotation rotation_between(const Spinor &psi, const Spinor &psi_prime);

/// Same rotation from the real 4 x 4 linear system in the unknowns
/// (c4, c1, c2, c3). Throws std::runtime_error if the system is singular.
SpinorRotation rotation_between_linear(const Spinor &psi, const Spinor &psi_prime);

/// Coefficient matrix of that linear system; its determinant is (sum u^2)^2.
Matrix4 rotation_system_matrix(const Spinor &psi);

/// Solves B(c) Psi = sign * Psi. The system is nonsingular for unit Psi, so
/// the answer is exactly sign * identity.
SpinorRotation stabilizer_check(const Spinor &psi, int sign);

}  // namespace spinor3
