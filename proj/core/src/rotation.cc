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

#include "spinor3/rotation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinor3 {

SpinorRotation SpinorRotation::from_components(double c4, double c1, double c2, double c3) {
    if (!std::isfinite(c4) || !std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3)) {
        throw std::invalid_argument("SpinorRotation: components must be finite");
    }
    double n = std::sqrt(c4 * c4 + c1 * c1 + c2 * c2 + c3 * c3);
    if (std::abs(n - 1.0) > kRenormalizeLimit) {
        throw std::invalid_argument("SpinorRotation: parameters must have unit norm");
    }
    return SpinorRotation(c4 / n, Vector3(c1 / n, c2 / n, c3 / n));
}

double max_abs_diff(const SpinorRotation &a, const SpinorRotation &b) {
    return std::max(std::abs(a.c4() - b.c4()), max_abs_diff(a.c(), b.c()));
}

ComplexMatrix2 su2_matrix(const SpinorRotation &rot) {
    double c4 = rot.c4();
    const Vector3 &c = rot.c();
    return {Complex(c4, -c[2]), Complex(-c[1], -c[0]), Complex(c[1], -c[0]), Complex(c4, c[2])};
}

SpinorRotation compose(const SpinorRotation &r1, const SpinorRotation &r2) {
    double a4 = r1.c4();
    double b4 = r2.c4();
    const Vector3 &a = r1.c();
    const Vector3 &b = r2.c();
    return SpinorRotation::from_components(a4 * b4 - dot(a, b), a4 * b + b4 * a + cross(a, b));
}

SpinorRotation conjugate(const SpinorRotation &rot) {
    return SpinorRotation::from_components(rot.c4(), -rot.c());
}

SpinorRotation hat(const SpinorRotation &rot) {
    const Vector3 &c = rot.c();
    return SpinorRotation::from_components(rot.c4(), c[0], -c[1], -c[2]);
}

SpinorRotation sigma3_phase(double angle) {
    return SpinorRotation::from_components(std::cos(angle), 0.0, 0.0, std::sin(angle));
}

}  // namespace spinor3
