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

#include "spinor3/spinor.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinor3 {

namespace {

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

Spinor::Spinor(Complex c1, Complex c2) : c1_(c1), c2_(c2) {
    if (!finite(c1) || !finite(c2)) {
        throw std::invalid_argument("Spinor: components must be finite");
    }
}

double max_abs_diff(const Spinor &a, const Spinor &b) {
    return std::max(std::abs(a.c1() - b.c1()), std::abs(a.c2() - b.c2()));
}

Spinor operator*(const ComplexMatrix2 &m, const Spinor &s) {
    return Spinor(m(0, 0) * s.c1() + m(0, 1) * s.c2(), m(1, 0) * s.c1() + m(1, 1) * s.c2());
}

bool KSQuadruple::is_finite() const {
    return std::all_of(q_.begin(), q_.end(), [](double v) { return std::isfinite(v); });
}

double max_abs_diff(const KSQuadruple &a, const KSQuadruple &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

Spinor spinor_from_quadruple(const KSQuadruple &q) {
    if (!q.is_finite()) {
        throw std::invalid_argument("spinor_from_quadruple: components must be finite");
    }
    return Spinor(Complex(q.q1(), q.q2()), Complex(q.q3(), q.q4()));
}

KSQuadruple quadruple_from_spinor(const Spinor &s) {
    return KSQuadruple(s.c2().imag(), s.c1().real(), s.c1().imag(), s.c2().real());
}

}  // namespace spinor3
