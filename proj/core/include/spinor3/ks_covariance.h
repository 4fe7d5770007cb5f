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

#include "spinor3/matrix.h"
#include "spinor3/rotation.h"
#include "spinor3/spinor.h"
#include "spinor3/vector3.h"

/// Normalized Kustaanheimo-Stiefel variables and their covariant frames.
///
/// A unit quadruple u doubles as the SU(2) element B(u) = u4 I - i sigma^j u_j.
/// Its hat image u^ = (u4, u1, -u2, -u3) satisfies
///
///     B(u^) sigma^3 B(u^)^{-1} = -n . sigma,
///
/// where n is the direction of the point. A frame (w, A) generalizes sigma^3
/// to an arbitrary unit axis A.
namespace spinor3 {

/// Unit quadruple u with the scale sum(q^2) = 2 r that was divided out.
class NormalizedKS {
   public:
    static constexpr double kUnitTolerance = 1e-9;

    /// Wraps an already-unit quadruple. Throws std::invalid_argument otherwise.
    static NormalizedKS from_unit(const KSQuadruple &u, double scale = 1.0);

    const KSQuadruple &u() const {
        return u_;
    }
    double scale() const {
        return scale_;
    }
    /// B(u) parameters (u4, u1, u2, u3).
    SpinorRotation as_rotation() const {
        return SpinorRotation::from_quadruple(u_);
    }
    /// sqrt(scale) * u, i.e. the original quadruple.
    KSQuadruple denormalized() const;

   private:
    NormalizedKS(const KSQuadruple &u, double scale) : u_(u), scale_(scale) {
    }
    KSQuadruple u_;
    double scale_ = 1.0;
};

/// u = q / |q|, scale = |q|^2. Throws DegenerateInputError for q = 0.
NormalizedKS normalize_ks(const KSQuadruple &q);

/// (u4, u1, u2, u3) -> (u4, u1, -u2, -u3). An involution.
NormalizedKS hat(const NormalizedKS &u);

/// n1 = 2(u1 u3 + u2 u4), n2 = 2(u1 u4 - u2 u3), n3 = u1^2 + u2^2 - u3^2 - u4^2.
Vector3 direction_from_ks(const NormalizedKS &u);

/// Left-multiplication matrix L(c) with params(B(c) B(x)) = L(c) x for any x
/// in (x4, x1, x2, x3) order:
///
///     | c4  -c1  -c2  -c3 |
///     | c1   c4  -c3   c2 |
///     | c2   c3   c4  -c1 |
///     | c3  -c2   c1   c4 |
Rotation4 transport_matrix(const SpinorRotation &c);

/// u' with B(c) B(u^) = B(u'^), computed on the hatted parameters through
/// transport_matrix. The direction moves as n' = O(c) n.
NormalizedKS left_transport(const SpinorRotation &c, const NormalizedKS &u);

/// The same u' computed on unhatted parameters: u' = su2_real4(c) u.
NormalizedKS left_transport_unhatted(const SpinorRotation &c, const NormalizedKS &u);

/// Covariant KS frame: B(w^) (A . sigma) B(w^)^{-1} = -n . sigma.
struct KSFrame {
    NormalizedKS w;
    Vector3 A;
    /// alpha - beta in B(w^) = B(u^) exp(-i (alpha - beta) sigma^3) B(a).
    double alpha_minus_beta = 0.0;
    /// a with O(a) A = (0, 0, +1).
    SpinorRotation align = SpinorRotation::identity();
};

/// Canonical a with O(a) A = (0, 0, 1): the c3 = 0 solution of the (+) gauge
/// of the spinor of A. Throws SingularAxisError for A = (0, 0, -1).
SpinorRotation align_rotation(const Vector3 &A);

/// Builds the frame with the canonical align rotation. Throws
/// std::invalid_argument when |A| != 1 and SingularAxisError for A = (0, 0, -1).
KSFrame build_frame(const NormalizedKS &u, const Vector3 &A, double phase = 0.0);

/// Builds the frame with a caller-supplied align rotation (must satisfy
/// O(align) A = (0, 0, 1), checked).
KSFrame build_frame(const NormalizedKS &u, const Vector3 &A, double phase, const SpinorRotation &align);

/// max |B(w^) (A . sigma) B(w^)^{-1} + n . sigma|.
double frame_identity_residual(const KSFrame &frame, const Vector3 &n);

/// c = B(u^) e B(a) [B(u^) e]^{-1} with e = exp(-i (alpha - beta) sigma^3), so
/// that B(c) B(u^) e = B(w^). Throws std::invalid_argument when the frame was
/// not built over the direction of u.
SpinorRotation frame_symmetry(const NormalizedKS &u, const KSFrame &frame);

/// n' = O(w^) O(a) O(w^)^{-1} n, for which B(w^) sigma^3 B(w^)^{-1} = -n' . sigma.
Vector3 rotated_direction(const KSFrame &frame, const Vector3 &n);

/// max |B(w^) sigma^3 B(w^)^{-1} + n' . sigma|.
double rotated_direction_residual(const KSFrame &frame, const Vector3 &n_prime);

/// max |B(u^) sigma^3 B(u^)^{-1} + n . sigma| with n = direction_from_ks(u).
double hopf_direction_residual(const NormalizedKS &u);

}  // namespace spinor3
