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

#include <stdexcept>
#include <string>

namespace spinor3 {

// Invalid-argument failures are reported with std::invalid_argument. The
// classes below mark inputs that are well-formed but sit on a point where
// the requested construction does not exist.

/// Input is the zero spinor/quadruple where a nonzero one is required.
class DegenerateInputError : public std::domain_error {
   public:
    explicit DegenerateInputError(const std::string &what) : std::domain_error(what) {
    }
};

/// A unitary gauge was requested at its excluded pole.
class SingularGaugeError : public std::domain_error {
   public:
    explicit SingularGaugeError(const std::string &what) : std::domain_error(what) {
    }
};

/// The canonical align rotation does not exist for A = (0, 0, -1).
class SingularAxisError : public std::domain_error {
   public:
    explicit SingularAxisError(const std::string &what) : std::domain_error(what) {
    }
};

}  // namespace spinor3
