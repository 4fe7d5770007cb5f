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

#include "spinor3/angle.h"

#include <cmath>
#include <stdexcept>

namespace spinor3 {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

}  // namespace

bool in_canonical_range(double radians) {
    return radians > -kTwoPi && radians <= kTwoPi;
}

DoubleCoverAngle::DoubleCoverAngle(double radians) {
    if (!std::isfinite(radians)) {
        throw std::invalid_argument("DoubleCoverAngle: angle must be finite");
    }
    if (!in_canonical_range(radians)) {
        radians = std::fmod(radians, kFourPi);
        if (radians <= -kTwoPi) {
            radians += kFourPi;
        } else if (radians > kTwoPi) {
            radians -= kFourPi;
        }
    }
    value_ = radians;
}

std::complex<double> DoubleCoverAngle::half_phase() const {
    return std::polar(1.0, 0.5 * value_);
}

DoubleCoverAngle DoubleCoverAngle::opposite() const {
    return DoubleCoverAngle(value_ + kTwoPi);
}

DoubleCoverAngle DoubleCoverAngle::lifted(Sheet sheet) const {
    return sheet == Sheet::principal ? *this : opposite();
}

}  // namespace spinor3
