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

#include "spinor3/sampling.h"

#include <cmath>
#include <numbers>

namespace spinor3 {

double Sampler::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double Sampler::normal() {
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vector3 Sampler::cube_point(double half_width) {
    double x1 = uniform(-half_width, half_width);
    double x2 = uniform(-half_width, half_width);
    double x3 = uniform(-half_width, half_width);
    return {x1, x2, x3};
}

Vector3 Sampler::unit_vector() {
    while (true) {
        double x1 = normal();
        double x2 = normal();
        double x3 = normal();
        Vector3 v(x1, x2, x3);
        double n = v.norm();
        if (n > 1e-8) {
            return (1.0 / n) * v;
        }
    }
}

SpinorRotation Sampler::haar_rotation() {
    while (true) {
        KSQuadruple q = gaussian_quadruple();
        double n = std::sqrt(q.norm2());
        if (n > 1e-8) {
            return SpinorRotation::from_components(q.q4() / n, q.q1() / n, q.q2() / n, q.q3() / n);
        }
    }
}

Spinor Sampler::unit_spinor() {
    while (true) {
        Spinor s = gaussian_spinor();
        double n = std::sqrt(s.norm2());
        if (n > 1e-8) {
            return Complex(1.0 / n) * s;
        }
    }
}

Spinor Sampler::gaussian_spinor() {
    double a = normal();
    double b = normal();
    double c = normal();
    double d = normal();
    return Spinor(Complex(a, b), Complex(c, d));
}

KSQuadruple Sampler::gaussian_quadruple() {
    double q4 = normal();
    double q1 = normal();
    double q2 = normal();
    double q3 = normal();
    return KSQuadruple(q4, q1, q2, q3);
}

}  // namespace spinor3
