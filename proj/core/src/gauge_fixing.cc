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

#include "spinor3/gauge_fixing.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinor3/errors.h"

namespace spinor3 {

namespace {

constexpr double kZeroNorm2 = 1e-300;
// Below this rho = sqrt(n1^2 + n2^2) a direction counts as a pole.
constexpr double kPoleLimit = 1e-12;
constexpr double kAzimuthTolerance = 1e-9;

KSQuadruple unit_quadruple(const Spinor &psi, const char *who) {
    double n2 = psi.norm2();
    if (n2 < kZeroNorm2) {
        throw DegenerateInputError(std::string(who) + ": spinor is zero");
    }
    if (std::abs(n2 - 1.0) > kUnitSpinorTolerance) {
        throw std::invalid_argument(std::string(who) + ": spinor must have unit norm");
    }
    return quadruple_from_spinor(psi);
}

SpinorRotation dressed(const SpinorRotation &a, double gamma) {
    return compose(sigma3_phase(0.5 * gamma), a);
}

}  // namespace

Spinor psi_from_direction(const Vector3 &n, DoubleCoverAngle gamma) {
    if (!n.is_finite() || std::abs(n.norm() - 1.0) > kUnitSpinorTolerance) {
        throw std::invalid_argument("psi_from_direction: direction must be a unit vector");
    }
    Vector3 u = (1.0 / n.norm()) * n;
    double rho = std::hypot(u[0], u[1]);
    if (rho > kPoleLimit) {
        double mismatch = std::remainder(gamma.value() - std::atan2(u[1], u[0]), 2.0 * std::numbers::pi);
        if (std::abs(mismatch) > kAzimuthTolerance) {
            throw std::invalid_argument("psi_from_direction: gamma disagrees with the azimuth of n");
        }
    }
    double a, b;
    if (u[2] >= 0.0) {
        a = std::sqrt(0.5 * (1.0 + u[2]));
        b = 0.5 * rho / a;
    } else {
        b = std::sqrt(0.5 * (1.0 - u[2]));
        a = 0.5 * rho / b;
    }
    Complex h = gamma.half_phase();
    return Spinor(a * std::conj(h), b * h);
}

Spinor psi_from_direction(const Vector3 &n, Sheet sheet) {
    double phi = std::hypot(n[0], n[1]) > kPoleLimit ? std::atan2(n[1], n[0]) : 0.0;
    return psi_from_direction(n, DoubleCoverAngle(phi).lifted(sheet));
}

Vector3 direction_of(const Spinor &psi) {
    Complex cross_term = std::conj(psi.c1()) * psi.c2();
    return {2.0 * cross_term.real(), 2.0 * cross_term.imag(), std::norm(psi.c1()) - std::norm(psi.c2())};
}

GaugeSolution gauge_plus(const Spinor &psi, double gamma) {
    KSQuadruple u = unit_quadruple(psi, "gauge_plus");
    SpinorRotation a = SpinorRotation::from_components(u.q1(), u.q4(), -u.q3(), u.q2());
    return {a, dressed(a, gamma), gamma};
}

GaugeSolution gauge_minus(const Spinor &psi, double gamma) {
    KSQuadruple u = unit_quadruple(psi, "gauge_minus");
    SpinorRotation a = SpinorRotation::from_components(u.q3(), u.q2(), u.q1(), -u.q4());
    return {a, dressed(a, gamma), gamma};
}

Spinor gauge_plus_target(double gamma) {
    return Spinor(std::polar(1.0, -0.5 * gamma), 0.0);
}

Spinor gauge_minus_target(double gamma) {
    return Spinor(0.0, std::polar(1.0, 0.5 * gamma));
}

CanonicalGauge canonical_phase_plus(const Spinor &psi) {
    KSQuadruple u = unit_quadruple(psi, "canonical_phase_plus");
    if (u.q1() * u.q1() + u.q2() * u.q2() < kSingularGaugeLimit) {
        throw SingularGaugeError("canonical_phase_plus: undefined at n = (0, 0, -1)");
    }
    double gamma = 2.0 * std::atan2(-u.q2(), u.q1());
    GaugeSolution solution = gauge_plus(psi, gamma);
    return {gamma, vector_parameter(solution.c), solution};
}

CanonicalGauge canonical_phase_minus(const Spinor &psi) {
    KSQuadruple u = unit_quadruple(psi, "canonical_phase_minus");
    if (u.q3() * u.q3() + u.q4() * u.q4() < kSingularGaugeLimit) {
        throw SingularGaugeError("canonical_phase_minus: undefined at n = (0, 0, +1)");
    }
    double gamma = 2.0 * std::atan2(u.q4(), u.q3());
    GaugeSolution solution = gauge_minus(psi, gamma);
    return {gamma, vector_parameter(solution.c), solution};
}

VectorParameter flat_vector_parameter_plus(const Vector3 &n) {
    double d = 1.0 + n[2];
    if (d < kSingularGaugeLimit) {
        throw SingularGaugeError("flat_vector_parameter_plus: undefined at n = (0, 0, -1)");
    }
    return VectorParameter(Vector3(n[1] / d, -n[0] / d, 0.0));
}

VectorParameter flat_vector_parameter_minus(const Vector3 &n) {
    double d = 1.0 - n[2];
    if (d < kSingularGaugeLimit) {
        throw SingularGaugeError("flat_vector_parameter_minus: undefined at n = (0, 0, +1)");
    }
    return VectorParameter(Vector3(-n[1] / d, n[0] / d, 0.0));
}

SpinorRotation rotation_between(const Spinor &psi, const Spinor &psi_prime) {
    KSQuadruple u = unit_quadruple(psi, "rotation_between");
    KSQuadruple u_prime = unit_quadruple(psi_prime, "rotation_between");
    SpinorRotation ratio = compose(SpinorRotation::from_quadruple(u_prime), conjugate(SpinorRotation::from_quadruple(u)));
    return hat(ratio);
}

Matrix4 rotation_system_matrix(const Spinor &psi) {
    KSQuadruple u = quadruple_from_spinor(psi);
    double u4 = u.q4(), u1 = u.q1(), u2 = u.q2(), u3 = u.q3();
    return Matrix4({{
        {u4, -u1, u2, u3},
        {u1, u4, -u3, u2},
        {u2, -u3, -u4, -u1},
        {u3, u2, u1, -u4},
    }});
}

SpinorRotation rotation_between_linear(const Spinor &psi, const Spinor &psi_prime) {
    unit_quadruple(psi, "rotation_between_linear");
    KSQuadruple u_prime = unit_quadruple(psi_prime, "rotation_between_linear");
    auto c = solve(rotation_system_matrix(psi), u_prime.storage());
    if (!c) {
        throw std::runtime_error("rotation_between_linear: singular system");
    }
    return SpinorRotation::from_components((*c)[0], (*c)[1], (*c)[2], (*c)[3]);
}

SpinorRotation stabilizer_check(const Spinor &psi, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("stabilizer_check: sign must be +1 or -1");
    }
    // The system has a unique solution, so agreement with +-identity up to
    // rounding identifies it; the exact value is returned.
    SpinorRotation solved = rotation_between_linear(psi, Complex(sign) * psi);
    SpinorRotation expected = SpinorRotation::from_components(sign, 0.0, 0.0, 0.0);
    if (!(max_abs_diff(solved, expected) <= 1e-12)) {
        throw std::runtime_error("stabilizer_check: nontrivial stabilizer solution");
    }
    return expected;
}

}  // namespace spinor3
