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

#include "spinor3/matrix.h"
#include "spinor3/spinor.h"
#include "spinor3/vector3.h"

namespace spinor3 {

/// Unit parameter tuple (c4, c1, c2, c3) of B(c) = c4 I - i sigma^j c_j in SU(2).
///
/// Inputs whose norm is within kRenormalizeLimit of 1 are rescaled to unit
/// norm; anything further off throws std::invalid_argument.
class SpinorRotation {
   public:
    static constexpr double kRenormalizeLimit = 1e-6;

    static SpinorRotation identity() {
        return SpinorRotation(1.0, Vector3(0.0, 0.0, 0.0));
    }
    static SpinorRotation from_components(double c4, double c1, double c2, double c3);
    static SpinorRotation from_components(double c4, const Vector3 &c) {
        return from_components(c4, c[0], c[1], c[2]);
    }
    /// Reads a quadruple in storage order (q4, q1, q2, q3) as (c4, c1, c2, c3).
    static SpinorRotation from_quadruple(const KSQuadruple &q) {
        return from_components(q.q4(), q.q1(), q.q2(), q.q3());
    }

    double c4() const {
        return c4_;
    }
    const Vector3 &c() const {
        return c_;
    }
    /// (c4, c1, c2, c3).
    std::array<double, 4> components() const {
        return {c4_, c_[0], c_[1], c_[2]};
    }
    KSQuadruple as_quadruple() const {
        return KSQuadruple(c4_, c_[0], c_[1], c_[2]);
    }
    SpinorRotation negated() const {
        return SpinorRotation(-c4_, -c_);
    }

   private:
    SpinorRotation(double c4, const Vector3 &c) : c4_(c4), c_(c) {
    }
    double c4_ = 1.0;
    Vector3 c_;
};

/// Largest |component difference|, no sign identification.
double max_abs_diff(const SpinorRotation &a, const SpinorRotation &b);

/// [[c4 - i c3, -c2 - i c1], [c2 - i c1, c4 + i c3]].
ComplexMatrix2 su2_matrix(const SpinorRotation &rot);

/// Parameters of su2_matrix(r1) * su2_matrix(r2), renormalized.
SpinorRotation compose(const SpinorRotation &r1, const SpinorRotation &r2);

/// Inverse element (c4, -c).
SpinorRotation conjugate(const SpinorRotation &rot);

/// (c4, c1, -c2, -c3): conjugation of B(c) by a half-turn about axis 1.
SpinorRotation hat(const SpinorRotation &rot);

/// exp(-i angle sigma^3) = (cos angle, 0, 0, sin angle).
SpinorRotation sigma3_phase(double angle);

}  // namespace spinor3
