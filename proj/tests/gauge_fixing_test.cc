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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "spinor3/spinor3.h"
#include "test_util.h"

using namespace spinor3;
using spinor3::testing::apply;
using spinor3::testing::max_abs;
using spinor3::testing::oracle_so3;
using spinor3::testing::oracle_su2;
using spinor3::testing::oracle_xi_projection;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

ComplexMatrix2 b_of(const SpinorRotation &r) {
    return oracle_su2(r.c4(), r.c()[0], r.c()[1], r.c()[2]);
}

// Rotation matrix acting on directions: O n with O_kl = 1/2 tr(sigma^l B^+ sigma^k B).
Vector3 rotate_direction(const SpinorRotation &r, const Vector3 &n) {
    return oracle_so3(b_of(r)) * n;
}

// Psi^+ sigma Psi from traces, no closed forms.
Vector3 direction_oracle(const Spinor &psi) {
    return 2.0 * oracle_xi_projection(psi).x;
}

double polar_angle(const Vector3 &n) {
    return std::atan2(std::hypot(n[0], n[1]), n[2]);
}

}  // namespace

TEST(psi_from_direction, examples) {
    EXPECT_LE(max_abs_diff(psi_from_direction({0, 0, 1}, DoubleCoverAngle(0.0)), Spinor(1.0, 0.0)), 1e-16);
    Spinor east = psi_from_direction({1, 0, 0}, DoubleCoverAngle(0.0));
    EXPECT_LE(max_abs_diff(east, Spinor(kInvSqrt2, kInvSqrt2)), 1e-15);
    EXPECT_LE(max_abs_diff(direction_oracle(east), Vector3(1, 0, 0)), 1e-15);
    EXPECT_LE(max_abs_diff(psi_from_direction({0, 0, -1}, DoubleCoverAngle(0.0)), Spinor(0.0, 1.0)), 1e-16);
}

TEST(psi_from_direction, preconditions) {
    EXPECT_THROW(psi_from_direction({0, 0, 2}, DoubleCoverAngle(0.0)), std::invalid_argument);
    EXPECT_THROW(psi_from_direction({1, 0, 0}, DoubleCoverAngle(1.0)), std::invalid_argument);
    // At a pole gamma is free.
    Spinor pole = psi_from_direction({0, 0, 1}, DoubleCoverAngle(1.0));
    EXPECT_NEAR(std::arg(pole.c1()), -0.5, 1e-15);
}

TEST(psi_from_direction, unit_norm_projection_and_sheets) {
    Sampler s(301);
    for (int k = 0; k < 1000; ++k) {
        Vector3 n = s.unit_vector();
        Spinor psi = psi_from_direction(n);
        ASSERT_NEAR(psi.norm2(), 1.0, 1e-15);
        ASSERT_LE(max_abs_diff(direction_oracle(psi), n), 1e-14);
        ASSERT_LE(max_abs_diff(direction_of(psi), n), 1e-14);
        ASSERT_LE(max_abs_diff(psi_from_direction(n, Sheet::flipped), -psi), 1e-15);
    }
}

TEST(gauge_plus, examples) {
    GaugeSolution g = gauge_plus(Spinor(1.0, 0.0), 0.0);
    EXPECT_LE(max_abs_diff(g.a, SpinorRotation::identity()), 0.0);
    Spinor psi(kInvSqrt2, kInvSqrt2);
    GaugeSolution h = gauge_plus(psi, 0.0);
    EXPECT_LE(max_abs_diff(h.a, SpinorRotation::from_components(kInvSqrt2, 0, -kInvSqrt2, 0)), 1e-16);
    EXPECT_LE(max_abs_diff(apply(b_of(h.a), psi), Spinor(1.0, 0.0)), 1e-15);
}

TEST(gauge_minus, examples) {
    GaugeSolution g = gauge_minus(Spinor(0.0, 1.0), 0.0);
    EXPECT_LE(max_abs_diff(g.a, SpinorRotation::identity()), 0.0);
    Spinor psi(kInvSqrt2, kInvSqrt2);
    GaugeSolution h = gauge_minus(psi, 0.0);
    EXPECT_LE(max_abs_diff(h.a, SpinorRotation::from_components(kInvSqrt2, 0, kInvSqrt2, 0)), 1e-16);
    EXPECT_LE(max_abs_diff(apply(b_of(h.a), psi), Spinor(0.0, 1.0)), 1e-15);
}

TEST(gauge, targets) {
    const Complex i(0, 1);
    EXPECT_LE(max_abs_diff(gauge_plus_target(kPi), Spinor(std::exp(-i * kPi / 2.0), 0.0)), 1e-16);
    EXPECT_LE(max_abs_diff(gauge_minus_target(kPi), Spinor(0.0, std::exp(i * kPi / 2.0))), 1e-16);
}

TEST(gauge, post_conditions_for_selected_phases) {
    Sampler s(303);
    for (int k = 0; k < 100; ++k) {
        Spinor psi = s.unit_spinor();
        for (double gamma : {0.0, kPi / 3, kPi}) {
            GaugeSolution p = gauge_plus(psi, gamma);
            ASSERT_LE(max_abs_diff(apply(b_of(p.c), psi), gauge_plus_target(gamma)), 1e-13);
            ASSERT_LE(max_abs_diff(apply(b_of(p.a), psi), Spinor(1.0, 0.0)), 1e-13);
            GaugeSolution m = gauge_minus(psi, gamma);
            ASSERT_LE(max_abs_diff(apply(b_of(m.c), psi), gauge_minus_target(gamma)), 1e-13);
            ASSERT_LE(max_abs_diff(apply(b_of(m.a), psi), Spinor(0.0, 1.0)), 1e-13);
            ASSERT_EQ(p.gamma, gamma);
        }
    }
}

TEST(gauge, post_conditions_hold_for_haar_spinors) {
    Sampler s(305);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        Spinor psi = s.unit_spinor();
        double gamma = s.uniform(-2 * kPi, 2 * kPi);
        worst = std::max(worst, max_abs_diff(apply(b_of(gauge_plus(psi, gamma).c), psi), gauge_plus_target(gamma)));
        worst = std::max(worst, max_abs_diff(apply(b_of(gauge_minus(psi, gamma).c), psi), gauge_minus_target(gamma)));
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(gauge, dressing_is_quaternion_product) {
    Sampler s(307);
    for (int k = 0; k < 1000; ++k) {
        Spinor psi = s.unit_spinor();
        double gamma = s.uniform(-kPi, kPi);
        for (const GaugeSolution &g : {gauge_plus(psi, gamma), gauge_minus(psi, gamma)}) {
            ASSERT_LE((b_of(sigma3_phase(gamma / 2)) * b_of(g.a) - b_of(g.c)).max_abs(), 1e-15);
        }
    }
}

TEST(gauge, covariant_under_rotation_of_the_input) {
    Sampler s(309);
    for (int k = 0; k < 1000; ++k) {
        Spinor psi = s.unit_spinor();
        SpinorRotation r = s.haar_rotation();
        Spinor moved = apply(b_of(r), psi);
        GaugeSolution g = gauge_plus(moved, 0.7);
        // The gauge of the moved spinor, pulled back by r, gauges the original.
        ComplexMatrix2 pulled = b_of(g.c) * b_of(r);
        ASSERT_LE(max_abs_diff(apply(pulled, psi), gauge_plus_target(0.7)), 1e-13);
    }
}

TEST(gauge, input_validation) {
    EXPECT_THROW(gauge_plus(Spinor::zero(), 0.0), DegenerateInputError);
    EXPECT_THROW(gauge_minus(Spinor::zero(), 0.0), DegenerateInputError);
    EXPECT_THROW(gauge_plus(Spinor(2.0, 0.0), 0.0), std::invalid_argument);
    EXPECT_THROW(gauge_minus(Spinor(0.5, 0.5), 0.0), std::invalid_argument);
    EXPECT_THROW(rotation_between(Spinor(2.0, 0.0), Spinor(1.0, 0.0)), std::invalid_argument);
}

TEST(gauge, linear_system_determinant_is_one) {
    Sampler s(311);
    for (int k = 0; k < 1000; ++k) {
        ASSERT_NEAR(rotation_system_matrix(s.unit_spinor()).determinant(), 1.0, 1e-13);
    }
}

TEST(canonical_phase_plus, examples) {
    CanonicalGauge north = canonical_phase_plus(Spinor(1.0, 0.0));
    EXPECT_LE(max_abs_diff(north.C.vector(), Vector3(0, 0, 0)), 0.0);
    CanonicalGauge east = canonical_phase_plus(Spinor(kInvSqrt2, kInvSqrt2));
    EXPECT_LE(max_abs_diff(east.C.vector(), Vector3(0, -1, 0)), 1e-15);
    EXPECT_NEAR(east.C.modulus(), std::tan(kPi / 4), 1e-15);
    EXPECT_LE(max_abs_diff(so3_from_vector_parameter(east.C) * Vector3(1, 0, 0), Vector3(0, 0, 1)), 1e-15);
    EXPECT_THROW(canonical_phase_plus(Spinor(0.0, 1.0)), SingularGaugeError);
    EXPECT_THROW(flat_vector_parameter_plus({0, 0, -1}), SingularGaugeError);
}

TEST(canonical_phase_minus, examples) {
    CanonicalGauge south = canonical_phase_minus(Spinor(0.0, 1.0));
    EXPECT_LE(max_abs_diff(south.C.vector(), Vector3(0, 0, 0)), 0.0);
    CanonicalGauge east = canonical_phase_minus(Spinor(kInvSqrt2, kInvSqrt2));
    EXPECT_LE(max_abs_diff(east.C.vector(), Vector3(0, 1, 0)), 1e-15);
    EXPECT_NEAR(east.C.modulus(), 1.0, 1e-15);
    EXPECT_LE(max_abs_diff(so3_from_vector_parameter(east.C) * Vector3(1, 0, 0), Vector3(0, 0, -1)), 1e-15);
    EXPECT_THROW(canonical_phase_minus(Spinor(1.0, 0.0)), SingularGaugeError);
    EXPECT_THROW(flat_vector_parameter_minus({0, 0, 1}), SingularGaugeError);
}

TEST(canonical_phase, rotates_direction_to_pole) {
    Sampler s(313);
    for (int k = 0; k < 10000; ++k) {
        Vector3 n = s.unit_vector();
        Spinor psi = psi_from_direction(n, k % 2 ? Sheet::flipped : Sheet::principal);
        double theta = polar_angle(n);
        if (n[2] > -1.0 + 1e-6) {
            CanonicalGauge p = canonical_phase_plus(psi);
            ASSERT_LE(std::abs(p.solution.c.c()[2]), 1e-12);
            ASSERT_LE(max_abs_diff(rotate_direction(p.solution.c, n), Vector3(0, 0, 1)), 1e-12);
            ASSERT_LE(max_abs_diff(so3_from_vector_parameter(p.C) * n, Vector3(0, 0, 1)), 1e-12);
            ASSERT_NEAR(p.C.modulus(), std::tan(theta / 2), 1e-12 * std::max(1.0, p.C.modulus()));
            ASSERT_LE(max_abs_diff(p.C.vector(), flat_vector_parameter_plus(n).vector()),
                      1e-12 * std::max(1.0, p.C.modulus()));
            ASSERT_LE(max_abs_diff(p.C.vector(), vector_parameter(p.solution.c).vector()),
                      1e-12 * std::max(1.0, p.C.modulus()));
        }
        if (n[2] < 1.0 - 1e-6) {
            CanonicalGauge m = canonical_phase_minus(psi);
            ASSERT_LE(std::abs(m.solution.c.c()[2]), 1e-12);
            ASSERT_LE(max_abs_diff(rotate_direction(m.solution.c, n), Vector3(0, 0, -1)), 1e-12);
            ASSERT_LE(max_abs_diff(so3_from_vector_parameter(m.C) * n, Vector3(0, 0, -1)), 1e-12);
            ASSERT_NEAR(m.C.modulus(), std::tan((kPi - theta) / 2), 1e-12 * std::max(1.0, m.C.modulus()));
            ASSERT_LE(max_abs_diff(m.C.vector(), flat_vector_parameter_minus(n).vector()),
                      1e-12 * std::max(1.0, m.C.modulus()));
        }
    }
}

TEST(rotation_between, examples) {
    Spinor psi(0.6, Complex(0.0, 0.8));
    EXPECT_LE(max_abs_diff(rotation_between(psi, psi), SpinorRotation::identity()), 1e-16);
    SpinorRotation flip = rotation_between(Spinor(1.0, 0.0), Spinor(0.0, 1.0));
    EXPECT_LE(max_abs_diff(flip, SpinorRotation::from_components(0, 0, 1, 0)), 1e-16);
    EXPECT_LE(max_abs(b_of(flip), ComplexMatrix2(0.0, -1.0, 1.0, 0.0)), 1e-16);
}

TEST(rotation_between, recovers_planted_rotation) {
    Sampler s(317);
    for (int k = 0; k < 10000; ++k) {
        Spinor psi = s.unit_spinor();
        SpinorRotation planted = s.haar_rotation();
        Spinor target = apply(b_of(planted), psi);
        SpinorRotation c = rotation_between(psi, target);
        ASSERT_NEAR(c.c4() * c.c4() + c.c().norm2(), 1.0, 1e-14);
        ASSERT_LE(max_abs_diff(apply(b_of(c), psi), target), 1e-13);
        double err = std::min(max_abs_diff(c, planted), max_abs_diff(c, planted.negated()));
        ASSERT_LE(err, 1e-13);
        ASSERT_LE(max_abs_diff(c, rotation_between_linear(psi, target)), 1e-13);
    }
}

TEST(rotation_between, two_unrelated_spinors) {
    Sampler s(319);
    for (int k = 0; k < 1000; ++k) {
        Spinor a = s.unit_spinor();
        Spinor b = s.unit_spinor();
        ASSERT_LE(max_abs_diff(apply(b_of(rotation_between(a, b)), a), b), 1e-13);
    }
}

TEST(stabilizer_check, only_trivial_solutions) {
    Sampler s(323);
    for (int k = 0; k < 1000; ++k) {
        Spinor psi = s.unit_spinor();
        ASSERT_EQ(stabilizer_check(psi, +1).components(), (std::array<double, 4>{1, 0, 0, 0}));
        ASSERT_EQ(stabilizer_check(psi, -1).components(), (std::array<double, 4>{-1, 0, 0, 0}));
    }
}

TEST(stabilizer_check, vector_small_group_is_a_circle) {
    Spinor up(1.0, 0.0);
    int spinor_fixed = 0;
    for (int j = 0; j < 16; ++j) {
        double alpha = j * kPi / 8;
        SpinorRotation r = sigma3_phase(alpha);
        EXPECT_LE(max_abs_diff(extract_so3(r) * Vector3(0, 0, 1), Vector3(0, 0, 1)), 1e-15);
        if (max_abs_diff(apply(b_of(r), up), up) <= 1e-15) {
            ++spinor_fixed;
            EXPECT_EQ(j, 0);
        }
    }
    EXPECT_EQ(spinor_fixed, 1);
}
