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

#include "spinor3/spinor_maps.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinor3/rotation_algebra.h"

namespace spinor3 {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Spinor with_half_phases(double m1, double m2, DoubleCoverAngle phi) {
    Complex h = phi.half_phase();
    return Spinor(m1 * std::conj(h), m2 * h);
}

void require_finite(const Vector3 &v, const char *who) {
    if (!v.is_finite()) {
        throw std::invalid_argument(std::string(who) + ": coordinates must be finite");
    }
}

}  // namespace

SphericalPoint::SphericalPoint(double r, double theta, DoubleCoverAngle phi) : r_(r), theta_(theta), phi_(phi) {
    if (!std::isfinite(r) || !std::isfinite(theta)) {
        throw std::invalid_argument("SphericalPoint: coordinates must be finite");
    }
    if (r < 0.0) {
        throw std::invalid_argument("SphericalPoint: r must be non-negative");
    }
    if (theta < 0.0 || theta > std::numbers::pi) {
        throw std::invalid_argument("SphericalPoint: theta must lie in [0, pi]");
    }
}

ParabolicPoint::ParabolicPoint(double n, double m, DoubleCoverAngle phi) : n_(n), m_(m), phi_(phi) {
    if (!std::isfinite(n) || !std::isfinite(m)) {
        throw std::invalid_argument("ParabolicPoint: coordinates must be finite");
    }
    if (n < 0.0 || m < 0.0) {
        throw std::invalid_argument("ParabolicPoint: N and M must be non-negative");
    }
}

Vector3 to_cartesian(const SphericalPoint &p) {
    double s = std::sin(p.theta());
    double phi = p.phi().value();
    return {p.r() * s * std::cos(phi), p.r() * s * std::sin(phi), p.r() * std::cos(p.theta())};
}

Vector3 to_cartesian(const ParabolicPoint &p) {
    double nm = p.n() * p.m();
    double phi = p.phi().value();
    return {nm * std::cos(phi), nm * std::sin(phi), 0.5 * (p.n() * p.n() - p.m() * p.m())};
}

DoubleCoverAngle azimuth(const Vector3 &v, Sheet sheet) {
    double phi = (v[0] == 0.0 && v[1] == 0.0) ? 0.0 : std::atan2(v[1], v[0]);
    return DoubleCoverAngle(phi).lifted(sheet);
}

Spinor xi_from_cartesian(const Vector3 &v, Sheet sheet) {
    require_finite(v, "xi_from_cartesian");
    double r = v.norm();
    if (r == 0.0) {
        return Spinor::zero();
    }
    double rho = std::hypot(v[0], v[1]);
    // sqrt(r + x3) sqrt(r - x3) = rho; take the root without cancellation.
    double a, b;
    if (v[2] >= 0.0) {
        a = std::sqrt(r + v[2]);
        b = rho / a;
    } else {
        b = std::sqrt(r - v[2]);
        a = rho / b;
    }
    return with_half_phases(a, b, azimuth(v, sheet));
}

Spinor xi_from_spherical(const SphericalPoint &p) {
    double k = std::sqrt(2.0 * p.r());
    return with_half_phases(k * std::cos(0.5 * p.theta()), k * std::sin(0.5 * p.theta()), p.phi());
}

Spinor xi_from_parabolic(const ParabolicPoint &p) {
    return with_half_phases(p.n(), p.m(), p.phi());
}

XiProjection project_xi(const Spinor &xi) {
    Complex cross_term = std::conj(xi.c1()) * xi.c2();
    double n1 = std::norm(xi.c1());
    double n2 = std::norm(xi.c2());
    return {0.5 * (n1 + n2), Vector3(cross_term.real(), cross_term.imag(), 0.5 * (n1 - n2))};
}

double hopf_constraint_residual(const KSQuadruple &q) {
    return q.q1() * q.q4() + q.q2() * q.q3();
}

Spinor phase_rotate(const Spinor &xi, double alpha) {
    return std::polar(1.0, alpha) * xi;
}

double phase_constraint_law(const KSQuadruple &q, double alpha) {
    return std::sin(2.0 * alpha) * (q.q1() * q.q3() - q.q2() * q.q4());
}

Spinor eta_from_cartesian(const Vector3 &v, Sheet sheet) {
    require_finite(v, "eta_from_cartesian");
    double r = v.norm();
    if (r == 0.0) {
        return Spinor::zero();
    }
    double rho = std::hypot(v[0], v[1]);
    double m2 = std::sqrt(r + rho);
    // (r - rho)(r + rho) = x3^2.
    double m1 = std::abs(v[2]) / m2;
    double sigma = v[2] >= 0.0 ? 1.0 : -1.0;
    return with_half_phases(sigma * m1, m2, azimuth(v, sheet));
}

Spinor eta_from_spherical(const SphericalPoint &p) {
    double c = std::cos(p.theta());
    double s = std::sin(p.theta());
    double root_r = std::sqrt(p.r());
    double m2 = root_r * std::sqrt(1.0 + s);
    double m1 = root_r * std::abs(c) / std::sqrt(1.0 + s);
    double sigma = c >= 0.0 ? 1.0 : -1.0;
    return with_half_phases(sigma * m1, m2, p.phi());
}

Spinor eta_from_parabolic(const ParabolicPoint &p) {
    return with_half_phases(kInvSqrt2 * (p.n() - p.m()), kInvSqrt2 * (p.n() + p.m()), p.phi());
}

EtaProjection project_eta(const Spinor &eta) {
    const Complex i(0.0, 1.0);
    Complex c1 = eta.c1();
    Complex c2 = eta.c2();
    Complex z1 = 0.5 * i * (c2 * c2 - c1 * c1);
    Complex z2 = 0.5 * (c1 * c1 + c2 * c2);
    Complex z3 = i * c1 * c2;
    return {Vector3(z1.real(), z2.real(), z3.real()), Vector3(z1.imag(), z2.imag(), z3.imag())};
}

EtaProjection eta_quadruple_projection(const KSQuadruple &v) {
    double v1 = v.q1(), v2 = v.q2(), v3 = v.q3(), v4 = v.q4();
    Vector3 a(v1 * v2 - v3 * v4, 0.5 * (v1 * v1 - v2 * v2 + v3 * v3 - v4 * v4), -v1 * v4 - v2 * v3);
    Vector3 x(0.5 * (-v1 * v1 + v2 * v2 + v3 * v3 - v4 * v4), v1 * v2 + v3 * v4, v1 * v3 - v2 * v4);
    return {a, x};
}

Spinor eta_from_xi(const Spinor &xi) {
    return Spinor(kInvSqrt2 * (xi.c1() - std::conj(xi.c2())), kInvSqrt2 * (xi.c2() + std::conj(xi.c1())));
}

Spinor xi_from_eta(const Spinor &eta) {
    return Spinor(kInvSqrt2 * (eta.c1() + std::conj(eta.c2())), kInvSqrt2 * (eta.c2() - std::conj(eta.c1())));
}

KSQuadruple u_to_v(const KSQuadruple &u) {
    return s_matrix() * u;
}

KSQuadruple v_to_u(const KSQuadruple &v) {
    return s_matrix().inverse() * v;
}

Spinor cartan_reflect(const Spinor &s, HalfSpaceSign delta) {
    return Complex(0.0, static_cast<int>(delta)) * s;
}

}  // namespace spinor3
