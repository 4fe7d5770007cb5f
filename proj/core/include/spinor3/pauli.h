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
#include "spinor3/vector3.h"

namespace spinor3 {

inline constexpr ComplexMatrix2 kSigma1{0.0, 1.0, 1.0, 0.0};
inline constexpr ComplexMatrix2 kSigma2{0.0, {0.0, -1.0}, {0.0, 1.0}, 0.0};
inline constexpr ComplexMatrix2 kSigma3{1.0, 0.0, 0.0, -1.0};

/// Cartan's reflection J = i I.
inline constexpr ComplexMatrix2 kCartanJ{{0.0, 1.0}, 0.0, 0.0, {0.0, 1.0}};

/// Pauli matrix sigma^k for k in {1, 2, 3}.
const ComplexMatrix2 &pauli(int k);

/// v . sigma = v_1 sigma^1 + v_2 sigma^2 + v_3 sigma^3.
ComplexMatrix2 pauli_dot(const Vector3 &v);

}  // namespace spinor3
