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
#include <limits>
#include <numbers>

#include "gtest/gtest.h"
#include "spinor3/spinor3.h"
#include "test_util.h"

using namespace spinor3;
using spinor3::testing::oracle_su2;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;

void expect_spinor_near(const Spinor &actual, const Spinor &expected, double tol) {
    EXPECT_LE(max_abs_diff(actual, expected), tol) << "got (" << actual.c1() << ", " << actual.c2() << ")";
}

}  // namespace

TEST(spinor_quadruple, spinor_from_quadruple_examples) {
    expect_spinor_near(spinor_from_quadruple({0, 1, 0, 1}), Spinor(1.0, 1.0), 0);
    expect_spinor_near(spinor_from_quadruple({0, 0, 0, 0}), Spinor::zero(), 0);
    expect_spinor_near(spinor_from_quadruple({1, 0, 0, 0}), Spinor(0.0, Complex(0, 1)), 0);
}

TEST(spinor_quadruple, quadruple_from_spinor_examples) {
    EXPECT_EQ(quadruple_from_spinor(Spinor(1.0, 1.0)), KSQuadruple(0, 1, 0, 1));
    EXPECT_EQ(quadruple_from_spinor(Spinor(kSqrt2, 0.0)), KSQuadruple(0, kSqrt2, 0, 0));
}

TEST(spinor_quadruple, round_trip_is_bit_exact) {
    Sampler s(11);
    for (int k = 0; k < 10000; ++k) {
        KSQuadruple q = s.gaussian_quadruple();
        ASSERT_EQ(quadruple_from_spinor(spinor_from_quadruple(q)), q);
        Spinor z = s.gaussian_spinor();
        ASSERT_EQ(spinor_from_quadruple(quadruple_from_spinor(z)), z);
    }
}

TEST(spinor_quadruple, non_finite_rejected) {
    double nan = std::numeric_limits<double>::quiet_NaN();
    double inf = std::numeric_limits<double>::infinity();
    EXPECT_THROW(spinor_from_quadruple({nan, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(spinor_from_quadruple({0, 0, inf, 0}), std::invalid_argument);
    EXPECT_THROW(Spinor(Complex(nan, 0), 0.0), std::invalid_argument);
}

TEST(su2_matrix, examples) {
    EXPECT_EQ(su2_matrix(SpinorRotation::identity()), ComplexMatrix2::identity());
    ComplexMatrix2 m3 = su2_matrix(SpinorRotation::from_components(0, 0, 0, 1));
    EXPECT_EQ(m3, ComplexMatrix2(Complex(0, -1), 0.0, 0.0, Complex(0, 1)));
    ComplexMatrix2 m2 = su2_matrix(SpinorRotation::from_components(0, 0, 1, 0));
    EXPECT_EQ(m2, ComplexMatrix2(0.0, -1.0, 1.0, 0.0));
}

TEST(su2_matrix, matches_pauli_assembly) {
    Sampler s(3);
    for (int k = 0; k < 1000; ++k) {
        SpinorRotation r = s.haar_rotation();
        EXPECT_LE((su2_matrix(r) - oracle_su2(r.c4(), r.c()[0], r.c()[1], r.c()[2])).max_abs(), 1e-15);
    }
}

TEST(su2_matrix, unitary_with_unit_determinant) {
    Sampler s(5);
    for (int k = 0; k < 10000; ++k) {
        ComplexMatrix2 m = su2_matrix(s.haar_rotation());
        ASSERT_LE((m.adjoint() * m - ComplexMatrix2::identity()).max_abs(), 1e-13);
        ASSERT_LE(std::abs(m.determinant() - Complex(1.0)), 1e-13);
    }
}

TEST(compose, identity_and_inverse) {
    Sampler s(17);
    for (int k = 0; k < 100; ++k) {
        SpinorRotation r = s.haar_rotation();
        EXPECT_LE(max_abs_diff(compose(SpinorRotation::identity(), r), r), 1e-15);
        EXPECT_LE(max_abs_diff(compose(r, SpinorRotation::identity()), r), 1e-15);
        EXPECT_LE(max_abs_diff(compose(r, conjugate(r)), SpinorRotation::identity()), 1e-15);
    }
}

TEST(compose, matches_matrix_product) {
    Sampler s(19);
    for (int k = 0; k < 1000; ++k) {
        SpinorRotation a = s.haar_rotation();
        SpinorRotation b = s.haar_rotation();
        ComplexMatrix2 expected = oracle_su2(a.c4(), a.c()[0], a.c()[1], a.c()[2]) *
                                  oracle_su2(b.c4(), b.c()[0], b.c()[1], b.c()[2]);
        ASSERT_LE((su2_matrix(compose(a, b)) - expected).max_abs(), 1e-13);
    }
}

TEST(compose, associative) {
    Sampler s(23);
    for (int k = 0; k < 1000; ++k) {
        SpinorRotation a = s.haar_rotation(), b = s.haar_rotation(), c = s.haar_rotation();
        ASSERT_LE(max_abs_diff(compose(compose(a, b), c), compose(a, compose(b, c))), 1e-12);
    }
}

TEST(spinor_rotation, renormalizes_small_drift_only) {
    SpinorRotation r = SpinorRotation::from_components(1.0 + 5e-7, 0, 0, 0);
    EXPECT_DOUBLE_EQ(r.c4(), 1.0);
    SpinorRotation q = SpinorRotation::from_components(0.6 * (1 + 1e-8), 0.8 * (1 + 1e-8), 0, 0);
    EXPECT_NEAR(q.c4() * q.c4() + q.c().norm2(), 1.0, 1e-15);
    EXPECT_THROW(SpinorRotation::from_components(1.0 + 1e-5, 0, 0, 0), std::invalid_argument);
    EXPECT_THROW(SpinorRotation::from_components(0.5, 0.5, 0, 0), std::invalid_argument);
    EXPECT_THROW(SpinorRotation::from_components(NAN, 0, 0, 0), std::invalid_argument);
}

TEST(spinor_rotation, hat_and_sigma3_phase) {
    SpinorRotation r = SpinorRotation::from_components(0.5, 0.5, 0.5, 0.5);
    EXPECT_EQ(hat(r).components(), (std::array<double, 4>{0.5, 0.5, -0.5, -0.5}));
    EXPECT_LE(max_abs_diff(hat(hat(r)), r), 0.0);
    ComplexMatrix2 p = su2_matrix(sigma3_phase(0.3));
    EXPECT_LE(std::abs(p(0, 0) - std::polar(1.0, -0.3)), 1e-16);
    EXPECT_LE(std::abs(p(1, 1) - std::polar(1.0, 0.3)), 1e-16);
}

TEST(double_cover_angle, canonical_range_and_identification) {
    EXPECT_DOUBLE_EQ(DoubleCoverAngle(1.0).value(), 1.0);
    EXPECT_DOUBLE_EQ(DoubleCoverAngle(2 * kPi).value(), 2 * kPi);
    EXPECT_NEAR(DoubleCoverAngle(-2 * kPi).value(), 2 * kPi, 1e-15);
    EXPECT_NEAR(DoubleCoverAngle(1.0 + 4 * kPi).value(), 1.0, 1e-14);
    EXPECT_NEAR(DoubleCoverAngle(1.0 - 8 * kPi).value(), 1.0, 1e-14);
    // value and value + 2 pi are distinct points.
    DoubleCoverAngle a(0.5);
    EXPECT_NEAR(a.opposite().value(), 0.5 - 2 * kPi, 1e-15);
    EXPECT_NEAR(std::abs(a.half_phase() + a.opposite().half_phase()), 0.0, 1e-15);
    EXPECT_EQ(a.lifted(Sheet::principal).value(), a.value());
    EXPECT_THROW(DoubleCoverAngle(NAN), std::invalid_argument);
    Sampler s(29);
    for (int k = 0; k < 1000; ++k) {
        double v = s.uniform(-100.0, 100.0);
        double c = DoubleCoverAngle(v).value();
        ASSERT_TRUE(in_canonical_range(c)) << v;
        ASSERT_NEAR(std::remainder(c - v, 4 * kPi), 0.0, 1e-12);
    }
}

TEST(tolerance, scale_aware_rule) {
    Tolerance t;
    EXPECT_TRUE(t.close(1.0, 1.0 + 1e-13));
    EXPECT_FALSE(t.close(1.0, 1.0 + 1e-11));
    EXPECT_TRUE(t.close(1e6, 1e6 + 1e-7));
    EXPECT_FALSE(t.close(1e6, 1e6 + 1e-5));
    EXPECT_TRUE(t.is_zero(5e-13));
    EXPECT_DOUBLE_EQ(scaled_difference(100.0, 101.0), 1.0 / 101.0);
    EXPECT_DOUBLE_EQ(scaled_difference(0.1, 0.2), 0.1);
}

TEST(matrix, solve_and_determinant) {
    Matrix3 m({{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}});
    auto x = solve(m, {1.0, 2.0, 3.0});
    ASSERT_TRUE(x.has_value());
    auto back = m.apply(*x);
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(back[i], 1.0 + i, 1e-14);
    }
    EXPECT_NEAR(m.determinant(), 18.0, 1e-13);
    Matrix3 singular({{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}});
    EXPECT_FALSE(solve(singular, {1.0, 1.0, 1.0}).has_value());
    EXPECT_NEAR(singular.determinant(), 0.0, 1e-14);
}

TEST(matrix, special_orthogonal_membership) {
    EXPECT_NO_THROW(Rotation3::from_matrix(spinor3::testing::axis_rotation(2, 0.7)));
    Matrix3 reflection = Matrix3::identity();
    reflection(0, 0) = -1;
    EXPECT_THROW(Rotation3::from_matrix(reflection), std::invalid_argument);
    EXPECT_THROW(Rotation3::from_matrix(2.0 * Matrix3::identity()), std::invalid_argument);
}

TEST(pauli, algebra) {
    const Complex i(0, 1);
    EXPECT_EQ(kSigma1 * kSigma2, i * kSigma3);
    EXPECT_EQ(kSigma2 * kSigma3, i * kSigma1);
    EXPECT_EQ(kSigma3 * kSigma1, i * kSigma2);
    for (int k = 1; k <= 3; ++k) {
        EXPECT_EQ(pauli(k) * pauli(k), ComplexMatrix2::identity());
    }
    EXPECT_THROW(pauli(0), std::invalid_argument);
    Vector3 v(0.3, -1.2, 2.0);
    EXPECT_EQ(pauli_dot(v), Complex(0.3) * kSigma1 + Complex(-1.2) * kSigma2 + Complex(2.0) * kSigma3);
    EXPECT_EQ(kCartanJ * kCartanJ, Complex(-1.0) * ComplexMatrix2::identity());
}

TEST(vector3, cross_matrix_acts_as_cross_product) {
    Vector3 a(1, 2, 3), b(-0.5, 4, 1);
    EXPECT_EQ(cross_matrix(a) * b, cross(a, b));
    EXPECT_EQ(cross(a, b), -cross(b, a));
}

TEST(sampler, deterministic_and_in_range) {
    Sampler a(99), b(99);
    for (int k = 0; k < 1000; ++k) {
        double u = a.uniform();
        ASSERT_EQ(u, b.uniform());
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
    Sampler c(1);
    for (int k = 0; k < 1000; ++k) {
        ASSERT_NEAR(c.unit_vector().norm(), 1.0, 1e-15);
        ASSERT_NEAR(c.unit_spinor().norm2(), 1.0, 1e-15);
        SpinorRotation r = c.haar_rotation();
        ASSERT_NEAR(r.c4() * r.c4() + r.c().norm2(), 1.0, 1e-15);
        Vector3 p = c.cube_point(10.0);
        ASSERT_LE(std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])}), 10.0);
    }
}

TEST(sampler, normal_moments) {
    Sampler s(7);
    double sum = 0, sum2 = 0;
    const int n = 200000;
    for (int k = 0; k < n; ++k) {
        double x = s.normal();
        sum += x;
        sum2 += x * x;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.01);
    EXPECT_NEAR(sum2 / n, 1.0, 0.02);
}
