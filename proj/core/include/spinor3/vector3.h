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
#include <cmath>
#include <cstddef>

namespace spinor3 {

/// Real 3-vector. Components are addressed 0-based through operator[]
/// and 1-based by name (x1, x2, x3).
class Vector3 {
   public:
    constexpr Vector3() = default;
    constexpr Vector3(double x1, double x2, double x3) : c_{x1, x2, x3} {
    }

    constexpr double x1() const {
        return c_[0];
    }
    constexpr double x2() const {
        return c_[1];
    }
    constexpr double x3() const {
        return c_[2];
    }
    constexpr double operator[](std::size_t i) const {
        return c_[i];
    }
    constexpr double &operator[](std::size_t i) {
        return c_[i];
    }
    constexpr const std::array<double, 3> &components() const {
        return c_;
    }

    double norm() const {
        return std::hypot(c_[0], c_[1], c_[2]);
    }
    constexpr double norm2() const {
        return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2];
    }
    bool is_finite() const {
        return std::isfinite(c_[0]) && std::isfinite(c_[1]) && std::isfinite(c_[2]);
    }

    friend constexpr Vector3 operator+(const Vector3 &a, const Vector3 &b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
    }
    friend constexpr Vector3 operator-(const Vector3 &a, const Vector3 &b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    }
    friend constexpr Vector3 operator-(const Vector3 &a) {
        return {-a[0], -a[1], -a[2]};
    }
    friend constexpr Vector3 operator*(double s, const Vector3 &a) {
        return {s * a[0], s * a[1], s * a[2]};
    }
    friend constexpr Vector3 operator*(const Vector3 &a, double s) {
        return s * a;
    }
    friend constexpr bool operator==(const Vector3 &, const Vector3 &) = default;

   private:
    std::array<double, 3> c_{};
};

constexpr double dot(const Vector3 &a, const Vector3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

constexpr Vector3 cross(const Vector3 &a, const Vector3 &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Largest componentwise |a - b|.
double max_abs_diff(const Vector3 &a, const Vector3 &b);

}  // namespace spinor3
