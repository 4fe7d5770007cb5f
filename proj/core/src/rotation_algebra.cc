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

#include "spinor3/rotation_algebra.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinor3/pauli.h"

namespace spinor3 {

namespace {

// Tolerance for results that are orthogonal by construction and only carry
// rounding error.
constexpr double kConstructedTolerance = 1e-9;

// Index into (c4, c1, c2, c3) and sign of every entry of the su2_real4 pattern.
struct PatternEntry {
    int parameter;
    double sign;
};

constexpr PatternEntry kPattern[4][4] = {
    {{0, +1}, {1, -1}, {2, +1}, {3, +1}},
    {{1, +1}, {0, +1}, {3, +1}, {2, -1}},
    {{2, -1}, {3, -1}, {0, +1}, {1, -1}},
    {{3, -1}, {2, +1}, {1, +1}, {0, +1}},
};

// Storage position of KS index k: 4 -> 0, 1..3 -> 1..3.
std::size_t position(int index) {
    return index == 4 ? 0 : static_cast<std::size_t>(index);
}

std::pair<int, int> plane_indices(Plane plane) {
    switch (plane) {
        case Plane::p23:
            return {2, 3};
        case Plane::p31:
            return {3, 1};
        case Plane::p12:
            return {1, 2};
        case Plane::p41:
            return {4, 1};
        case Plane::p42:
            return {4, 2};
        case Plane::p43:
            return {4, 3};
    }
    throw std::invalid_argument("unknown plane");
}

double max_abs_matrix_diff(const Matrix4 &a, const Matrix4 &b) {
    return (a - b).max_abs();
}

}  // namespace

VectorParameter::VectorParameter(const Vector3 &c) : c_(c) {
    if (!c.is_finite()) {
        throw std::invalid_argument("VectorParameter: components must be finite");
    }
}

VectorParameter vector_parameter(const SpinorRotation &rot) {
    if (std::abs(rot.c4()) < kHalfTurnLimit) {
        throw std::invalid_argument("vector_parameter: half-turn has no vector parameter");
    }
    return VectorParameter((1.0 / rot.c4()) * rot.c());
}

SpinorRotation rotation_from_vector_parameter(const VectorParameter &C) {
    double k = 1.0 / std::sqrt(1.0 + C.vector().norm2());
    return SpinorRotation::from_components(k, k * C.vector());
}

Rotation3 so3_from_rotation(const SpinorRotation &rot) {
    Matrix3 x = cross_matrix(rot.c());
    Matrix3 m = Matrix3::identity() + 2.0 * (rot.c4() * x + x * x);
    return Rotation3::from_matrix(m, kConstructedTolerance);
}

Rotation3 so3_from_vector_parameter(const VectorParameter &C) {
    Matrix3 x = cross_matrix(C.vector());
    Matrix3 m = Matrix3::identity() + (2.0 / (1.0 + C.vector().norm2())) * (x + x * x);
    return Rotation3::from_matrix(m, kConstructedTolerance);
}

Rotation3 extract_so3(const SpinorRotation &rot) {
    ComplexMatrix2 b = su2_matrix(rot);
    ComplexMatrix2 b_dagger = b.adjoint();
    Matrix3 m;
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
            m(k - 1, l - 1) = 0.5 * (pauli(k) * b * pauli(l) * b_dagger).trace().real();
        }
    }
    return Rotation3::from_matrix(m, kConstructedTolerance);
}

Matrix4 su2_real4_pattern(double c4, double c1, double c2, double c3) {
    const double c[4] = {c4, c1, c2, c3};
    Matrix4 m;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            m(i, j) = kPattern[i][j].sign * c[kPattern[i][j].parameter];
        }
    }
    return m;
}

Rotation4 su2_real4(const SpinorRotation &rot) {
    const Vector3 &c = rot.c();
    return Rotation4::from_matrix(su2_real4_pattern(rot.c4(), c[0], c[1], c[2]), kConstructedTolerance);
}

Plane parse_plane(std::string_view label) {
    for (Plane p : kAllPlanes) {
        if (to_string(p) == label) {
            return p;
        }
    }
    throw std::invalid_argument("unknown plane '" + std::string(label) + "'");
}

std::string to_string(Plane plane) {
    auto [i, j] = plane_indices(plane);
    return std::to_string(i) + "-" + std::to_string(j);
}

Rotation4 elementary_so4(Plane plane, double angle) {
    auto [i, j] = plane_indices(plane);
    std::size_t a = position(i);
    std::size_t b = position(j);
    if (a > b) {
        std::swap(a, b);
    }
    double c = std::cos(angle);
    double s = std::sin(angle);
    Matrix4 m = Matrix4::identity();
    m(a, a) = c;
    m(b, b) = c;
    m(a, b) = -s;
    m(b, a) = s;
    return Rotation4::from_matrix(m, kConstructedTolerance);
}

Rotation4 s_matrix() {
    const double k = 1.0 / std::numbers::sqrt2;
    Matrix4 m({{
        {k, 0.0, -k, 0.0},
        {0.0, k, 0.0, -k},
        {k, 0.0, k, 0.0},
        {0.0, k, 0.0, k},
    }});
    return Rotation4::from_matrix(m, kConstructedTolerance);
}

SFactorization s_factorization_check() {
    constexpr double kQuarter = std::numbers::pi / 4.0;
    constexpr double kHalf = std::numbers::pi / 2.0;
    const Matrix4 s = s_matrix().matrix();
    auto product_residual = [&](double a42, double a31) {
        Matrix4 p = (elementary_so4(Plane::p42, a42) * elementary_so4(Plane::p31, a31)).matrix();
        return max_abs_matrix_diff(p, s);
    };

    SFactorization best;
    best.residual = INFINITY;
    for (double a42 : {kQuarter, kHalf}) {
        for (double a31 : {kQuarter, kHalf}) {
            double residual = product_residual(a42, a31);
            if (residual < best.residual) {
                best.angle_42 = a42;
                best.angle_31 = a31;
                best.residual = residual;
            }
        }
    }
    best.factor_42 = elementary_so4(Plane::p42, best.angle_42);
    best.factor_31 = elementary_so4(Plane::p31, best.angle_31);
    best.commutator =
        max_abs_matrix_diff((best.factor_42 * best.factor_31).matrix(), (best.factor_31 * best.factor_42).matrix());
    best.claim_residual_half_quarter = product_residual(kHalf, kQuarter);
    best.claim_residual_quarter_half = product_residual(kQuarter, kHalf);
    return best;
}

Su2ImageMatch match_su2_real4(const Matrix4 &target, double tolerance) {
    Su2ImageMatch match;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const PatternEntry &e = kPattern[i][j];
            match.least_squares[e.parameter] += 0.25 * e.sign * target(i, j);
        }
    }
    const auto &ls = match.least_squares;
    match.residual = (target - su2_real4_pattern(ls[0], ls[1], ls[2], ls[3])).frobenius_norm();

    for (int parameter = 0; parameter < 4; ++parameter) {
        int row_a = -1, col_a = -1;
        double implied_a = 0.0;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const PatternEntry &e = kPattern[i][j];
                if (e.parameter != parameter) {
                    continue;
                }
                double implied = e.sign * target(i, j);
                if (row_a < 0) {
                    row_a = i;
                    col_a = j;
                    implied_a = implied;
                } else if (std::abs(implied - implied_a) > tolerance) {
                    match.conflicts.push_back({parameter, row_a, col_a, implied_a, i, j, implied});
                }
            }
        }
    }
    return match;
}

Su2ImageMatch s_outside_su2_image() {
    return match_su2_real4(s_matrix().matrix());
}

Spinor rotate_spinor(const SpinorRotation &rot, const Spinor &s) {
    return su2_matrix(rot) * s;
}

}  // namespace spinor3
