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

#include <complex>
#include <numbers>

namespace spinor3 {

/// Sign selecting which of the two lifts of a Cartesian azimuth is used.
/// `flipped` adds 2*pi to the azimuth, which negates every spinor.
enum class Sheet : int { principal = +1, flipped = -1 };

inline constexpr int sign_of(Sheet sheet) {
    return static_cast<int>(sheet);
}

/// Angle on the 4*pi double cover, stored in (-2*pi, 2*pi].
///
/// Values that differ by 4*pi are the same point. Values that differ by 2*pi
/// are distinct: they sit on opposite spinor sheets.
class DoubleCoverAngle {
   public:
    constexpr DoubleCoverAngle() = default;
    explicit DoubleCoverAngle(double radians);

    double value() const {
        return value_;
    }
    /// e^{i value / 2}.
    std::complex<double> half_phase() const;
    /// The point on the opposite sheet (value + 2*pi).
    DoubleCoverAngle opposite() const;
    DoubleCoverAngle lifted(Sheet sheet) const;

    friend DoubleCoverAngle operator+(DoubleCoverAngle angle, double radians) {
        return DoubleCoverAngle(angle.value_ + radians);
    }

   private:
    double value_ = 0.0;
};

/// True if `radians` is already inside (-2*pi, 2*pi].
bool in_canonical_range(double radians);

}  // namespace spinor3
