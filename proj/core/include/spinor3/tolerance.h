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

#include <algorithm>
#include <cmath>

namespace spinor3 {

/// Scale-aware comparison: |lhs - rhs| <= absolute + relative * max(|lhs|, |rhs|).
struct Tolerance {
    double absolute = 1e-12;
    double relative = 1e-12;

    constexpr Tolerance() = default;
    constexpr Tolerance(double absolute_tol, double relative_tol) : absolute(absolute_tol), relative(relative_tol) {
    }
    /// Same value for both parts.
    static constexpr Tolerance uniform(double tol) {
        return Tolerance(tol, tol);
    }

    bool close(double lhs, double rhs) const {
        return std::abs(lhs - rhs) <= absolute + relative * std::max(std::abs(lhs), std::abs(rhs));
    }
    bool is_zero(double value) const {
        return std::abs(value) <= absolute;
    }
};

inline constexpr Tolerance kDefaultTolerance{};

/// |lhs - rhs| / max(1, |lhs|, |rhs|); the quantity reported by residual checks.
inline double scaled_difference(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace spinor3
