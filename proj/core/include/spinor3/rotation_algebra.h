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
#include <string>
#include <string_view>
#include <vector>

#include "spinor3/matrix.h"
#include "spinor3/rotation.h"
#include "spinor3/spinor.h"
#include "spinor3/vector3.h"

namespace spinor3 {

/// Gibbs vector C = c / c4 of a rotation; |C| = tan(half angle).
/// Cannot represent half-turns (c4 = 0).
class VectorParameter {
   public:
    constexpr VectorParameter() = default;
    /// Throws std::invalid_argument on non-finite input.
    explicit VectorParameter(const Vector3 &c);

    const Vector3 &vector() const {
        return c_;
    }
    double modulus() const {
        return c_.norm();
    }

   private:
    Vector3 c_;
};

/// Smallest |c4| accepted by vector_parameter().
inline constexpr double kHalfTurnLimit = 1e-9;

/// C = c / c4. Throws std::invalid_argument when |c4| < kHalfTurnLimit.
VectorParameter vector_parameter(const SpinorRotation &rot);

/// (1, C) / sqrt(1 + C^2).
SpinorRotation rotation_from_vector_parameter(const VectorParameter &C);

/// O = I + 2 [c4 c^x + (c^x)^2]. O(c) = O(-c).
Rotation3 so3_from_rotation(const SpinorRotation &rot);

/// O = I + 2 [C^x + (C^x)^2] / (1 + C^2).
Rotation3 so3_from_vector_parameter(const VectorParameter &C);

/// O_{kl} = 1/2 tr(sigma^k B sigma^l B^+), i.e. B^+ sigma^k B = O_{kl} sigma^l.
Rotation3 extract_so3(const SpinorRotation &rot);

/// Real 4 x 4 form of xi -> B(c) xi acting on (q4, q1, q2, q3):
///
///     |  c4  -c1   c2   c3 |
///     |  c1   c4   c3  -c2 |
///     | -c2  -c3   c4  -c1 |
///     | -c3   c2   c1   c4 |
Rotation4 su2_real4(const SpinorRotation &rot);

/// Same matrix pattern for an arbitrary (not necessarily unit) 4-tuple.
Matrix4 su2_real4_pattern(double c4, double c1, double c2, double c3);

/// Planes of the six elementary SO(4) rotations, named by quadruple index.
enum class Plane { p23, p31, p12, p41, p42, p43 };

/// Parses "2-3", "3-1", "1-2", "4-1", "4-2", "4-3". Throws std::invalid_argument otherwise.
Plane parse_plane(std::string_view label);
std::string to_string(Plane plane);
inline constexpr std::array<Plane, 6> kAllPlanes{Plane::p23, Plane::p31, Plane::p12,
                                                 Plane::p41, Plane::p42, Plane::p43};

/// Rotation by `angle` in the given plane: with storage positions a < b of the
/// two indices, M(a,a) = M(b,b) = cos, M(a,b) = -sin, M(b,a) = sin.
Rotation4 elementary_so4(Plane plane, double angle);

/// The constant matrix mapping U to V (both in (q4, q1, q2, q3) order):
///
///     1/sqrt(2) | 1  0 -1  0 |
///               | 0  1  0 -1 |
///               | 1  0  1  0 |
///               | 0  1  0  1 |
Rotation4 s_matrix();

/// Factorization of s_matrix() into commuting rotations in planes 4-2 and 3-1.
struct SFactorization {
    double angle_42 = 0.0;
    double angle_31 = 0.0;
    Rotation4 factor_42 = Rotation4::identity();
    Rotation4 factor_31 = Rotation4::identity();
    /// max |factor_42 * factor_31 - S|.
    double residual = 0.0;
    /// max |factor_42 * factor_31 - factor_31 * factor_42|.
    double commutator = 0.0;
    /// max |S_42(pi/2) S_31(pi/4) - S| and max |S_42(pi/4) S_31(pi/2) - S|.
    double claim_residual_half_quarter = 0.0;
    double claim_residual_quarter_half = 0.0;
};

/// Scans angles {pi/4, pi/2} in each slot and keeps the best product.
SFactorization s_factorization_check();

/// Two entries of a target matrix that force different values onto the same
/// SU(2) parameter.
struct EntryConflict {
    int parameter = 0;  ///< 0 = c4, 1..3 = c1..c3
    int row_a = 0, col_a = 0;
    double implied_a = 0.0;
    int row_b = 0, col_b = 0;
    double implied_b = 0.0;
};

/// Result of matching a 4 x 4 matrix against the su2_real4 family.
struct Su2ImageMatch {
    /// Least-squares (c4, c1, c2, c3) over all 16 entry equations.
    std::array<double, 4> least_squares{};
    /// Frobenius norm of target - su2_real4_pattern(least_squares).
    double residual = 0.0;
    /// Pairs of entries that contradict each other.
    std::vector<EntryConflict> conflicts;
    bool in_image() const {
        return conflicts.empty();
    }
};

Su2ImageMatch match_su2_real4(const Matrix4 &target, double tolerance = 1e-12);

/// match_su2_real4(s_matrix()); the conflicts certify S is not an SU(2) action.
Su2ImageMatch s_outside_su2_image();

/// B(c) s.
Spinor rotate_spinor(const SpinorRotation &rot, const Spinor &s);

}  // namespace spinor3
