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

#include "spinor3/matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spinor3/pauli.h"
#include "spinor3/vector3.h"

namespace spinor3 {

double max_abs_diff(const Vector3 &a, const Vector3 &b) {
    return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
}

Matrix3 cross_matrix(const Vector3 &v) {
    return Matrix3({{
        {0.0, -v[2], v[1]},
        {v[2], 0.0, -v[0]},
        {-v[1], v[0], 0.0},
    }});
}

ComplexMatrix2 ComplexMatrix2::inverse() const {
    Complex det = determinant();
    return {m_[3] / det, -m_[1] / det, -m_[2] / det, m_[0] / det};
}

double ComplexMatrix2::max_abs() const {
    double m = 0.0;
    for (const auto &z : m_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

const ComplexMatrix2 &pauli(int k) {
    switch (k) {
        case 1:
            return kSigma1;
        case 2:
            return kSigma2;
        case 3:
            return kSigma3;
        default:
            throw std::invalid_argument("pauli: index must be 1, 2 or 3");
    }
}

ComplexMatrix2 pauli_dot(const Vector3 &v) {
    using C = std::complex<double>;
    return ComplexMatrix2(v[2], C(v[0], -v[1]), C(v[0], v[1]), -v[2]);
}

}  // namespace spinor3
