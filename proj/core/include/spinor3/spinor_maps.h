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
#include "spinor3/spinor.h"
#include "spinor3/vector3.h"

/// Constructors of the two spatial spinors and their projections to 3-space.
///
/// xi models a pseudovector space: x_j = 1/2 xi^+ sigma^j xi, r = 1/2 xi^+ xi.
/// eta models a vector space: a_j + i x_j = 1/2 tr[sigma^2 sigma^j (eta (x) eta)].
/// Both are 2 -> 1 over ordinary points; the azimuth lives on the 4*pi cover.
namespace spinor3 {

/// (r, theta, phi) with r >= 0 and theta in [0, pi].
class SphericalPoint {
   public:
    /// Throws std::invalid_argument when r < 0, theta is outside [0, pi], or
    /// a value is not finite.
    SphericalPoint(double r, double theta, DoubleCoverAngle phi);

    double r() const {
        return r_;
    }
    double theta() const {
        return theta_;
    }
    DoubleCoverAngle phi() const {
        return phi_;
    }

   private:
    double r_;
    double theta_;
    DoubleCoverAngle phi_;
};

/// Parabolic coordinates (N, M, phi), N, M >= 0:
/// x1 = N M cos(phi), x2 = N M sin(phi), x3 = (N^2 - M^2) / 2, r = (N^2 + M^2) / 2.
class ParabolicPoint {
   public:
    /// Throws std::invalid_argument when N or M is negative or not finite.
    ParabolicPoint(double n, double m, DoubleCoverAngle phi);

    double n() const {
        return n_;
    }
    double m() const {
        return m_;
    }
    DoubleCoverAngle phi() const {
        return phi_;
    }

   private:
    double n_;
    double m_;
    DoubleCoverAngle phi_;
};

/// Intrinsic parity delta, or the half-space sign sigma of eta.
enum class HalfSpaceSign : int { plus = +1, minus = -1 };

/// Cartesian position of a spherical / parabolic point.
Vector3 to_cartesian(const SphericalPoint &p);
Vector3 to_cartesian(const ParabolicPoint &p);

/// Azimuth of a Cartesian point lifted to the requested sheet. On the axis
/// (x1 = x2 = 0) the principal azimuth is 0.
DoubleCoverAngle azimuth(const Vector3 &v, Sheet sheet);

// ---- pseudovector model: xi ----

/// xi = (sqrt(r + x3) e^{-i phi/2}, sqrt(r - x3) e^{+i phi/2}).
Spinor xi_from_cartesian(const Vector3 &v, Sheet sheet = Sheet::principal);
/// xi = (sqrt(r (1 + cos theta)) e^{-i phi/2}, sqrt(r (1 - cos theta)) e^{+i phi/2}).
Spinor xi_from_spherical(const SphericalPoint &p);
/// xi = (N e^{-i phi/2}, M e^{+i phi/2}).
Spinor xi_from_parabolic(const ParabolicPoint &p);

struct XiProjection {
    double r = 0.0;
    Vector3 x;
};

/// r = 1/2 xi^+ xi, x_j = 1/2 xi^+ sigma^j xi. Invariant under global phase.
XiProjection project_xi(const Spinor &xi);

/// U1 U4 + U2 U3 in the named-index convention; zero on the Hopf constraint
/// surface. Serves both U (xi) and V (eta) quadruples.
double hopf_constraint_residual(const KSQuadruple &q);
inline double xi_constraint_residual(const KSQuadruple &q) {
    return hopf_constraint_residual(q);
}
inline double eta_constraint_residual(const KSQuadruple &q) {
    return hopf_constraint_residual(q);
}

/// e^{i alpha} xi. Leaves project_xi unchanged but moves the quadruple off
/// the constraint surface unless e^{i alpha} is one of +1, -1, +i, -i.
Spinor phase_rotate(const Spinor &xi, double alpha);

/// sin(2 alpha) (U1 U3 - U2 U4): the constraint residual that phase_rotate
/// produces from a constraint-satisfying quadruple.
double phase_constraint_law(const KSQuadruple &q, double alpha);

// ---- vector model: eta ----

/// eta = (sigma sqrt(r - rho) e^{-i phi/2}, sqrt(r + rho) e^{+i phi/2}),
/// rho = sqrt(x1^2 + x2^2), sigma = sign(x3) with sigma = +1 at x3 = 0.
Spinor eta_from_cartesian(const Vector3 &v, Sheet sheet = Sheet::principal);
/// eta = (sigma sqrt(r (1 - sin theta)) e^{-i phi/2}, sqrt(r (1 + sin theta)) e^{+i phi/2}),
/// sigma = sign(cos theta) with sigma = +1 at theta = pi/2.
Spinor eta_from_spherical(const SphericalPoint &p);
/// eta = ((N - M) e^{-i phi/2}, (N + M) e^{+i phi/2}) / sqrt(2).
Spinor eta_from_parabolic(const ParabolicPoint &p);

/// a_j + i x_j = 1/2 tr[sigma^2 sigma^j (eta (x) eta)]. a_3 vanishes on every
/// constructor output.
EtaProjection project_eta(const Spinor &eta);

/// The same projection written as explicit bilinear forms of (V1, ..., V4).
EtaProjection eta_quadruple_projection(const KSQuadruple &v);

// ---- bridges between the models ----

/// eta = (xi - i sigma^2 xi^*) / sqrt(2).
Spinor eta_from_xi(const Spinor &xi);
/// Exact inverse of eta_from_xi: xi = (eta + i sigma^2 eta^*) / sqrt(2).
Spinor xi_from_eta(const Spinor &eta);

/// V = S U with the constant orthogonal S of rotation_algebra's s_matrix().
KSQuadruple u_to_v(const KSQuadruple &u);
/// U = S^T V.
KSQuadruple v_to_u(const KSQuadruple &v);

/// delta J s with J = i I.
Spinor cartan_reflect(const Spinor &s, HalfSpaceSign delta);

}  // namespace spinor3
