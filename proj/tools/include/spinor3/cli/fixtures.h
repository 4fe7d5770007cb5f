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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spinor3/angle.h"
#include "spinor3/spinor.h"
#include "spinor3/vector3.h"

namespace spinor3::cli {

enum class CoordinateSystem { cartesian, spherical, parabolic };
enum class SpinorModel { xi, eta, psi };

CoordinateSystem parse_system(std::string_view name);
SpinorModel parse_model(std::string_view name);
/// Accepts "+1", "1", "principal", "-1", "flipped".
Sheet parse_sheet(std::string_view text);
std::string to_string(CoordinateSystem system);
std::string to_string(SpinorModel model);

struct FixtureInput {
    CoordinateSystem system = CoordinateSystem::cartesian;
    /// (x1, x2, x3), (r, theta, phi) or (N, M, phi).
    std::array<double, 3> values{};
    Sheet sheet = Sheet::principal;
};

/// One golden record. For xi: r = 1/2 xi^+ xi, x = 1/2 xi^+ sigma xi.
/// For eta: x and a from the trace projection, r = |x|. For psi (the unit
/// spinor of the input's direction): r = psi^+ psi and x = psi^+ sigma psi.
struct FixtureRecord {
    FixtureInput input;
    SpinorModel model = SpinorModel::xi;
    Spinor spinor;
    KSQuadruple quadruple;
    double r = 0.0;
    Vector3 x;
    std::optional<Vector3> a;
    std::optional<std::uint64_t> seed;
    double tolerance = 1e-12;
    std::string version;
};

/// Version string written into record metadata.
std::string artifact_version();

/// Builds the spinor for an input. Throws std::invalid_argument on range errors.
Spinor construct_spinor(const FixtureInput &input, SpinorModel model);

/// Constructs and projects. Throws std::invalid_argument on range errors.
FixtureRecord make_record(const FixtureInput &input, SpinorModel model, double tolerance,
                          std::optional<std::uint64_t> seed = std::nullopt);

/// Projection fields of a spinor under a model (fills r, x and, for eta, a).
void project_into(FixtureRecord &record);

nlohmann::ordered_json to_json(const FixtureRecord &record);
/// Throws std::invalid_argument on schema violations.
FixtureRecord record_from_json(const nlohmann::ordered_json &j);

/// Largest scaled difference between the stored outputs and a fresh
/// recomputation from the stored inputs.
double replay_residual(const FixtureRecord &record);

/// Deterministic random records covering every system, model and sheet.
std::vector<FixtureRecord> generate_fixtures(std::size_t count, std::uint64_t seed, double tolerance);

}  // namespace spinor3::cli
