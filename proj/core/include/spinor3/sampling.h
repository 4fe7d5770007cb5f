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

#include <cstdint>
#include <random>

#include "spinor3/rotation.h"
#include "spinor3/spinor.h"
#include "spinor3/vector3.h"

namespace spinor3 {

/// Seeded sample source for property checks and fixture generation.
///
/// Built on std::mt19937_64, whose output sequence is fixed by the standard.
/// Doubles are derived from it here rather than through <random>
/// distributions, whose output differs between standard libraries.
class Sampler {
   public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi);
    /// Standard normal (Box-Muller).
    double normal();

    Vector3 cube_point(double half_width);
    Vector3 unit_vector();
    /// Haar-distributed SU(2) element.
    SpinorRotation haar_rotation();
    /// Uniform on the unit 3-sphere of spinors.
    Spinor unit_spinor();
    /// Spinor with Gaussian components.
    Spinor gaussian_spinor();
    KSQuadruple gaussian_quadruple();

   private:
    std::mt19937_64 engine_;
};

}  // namespace spinor3
