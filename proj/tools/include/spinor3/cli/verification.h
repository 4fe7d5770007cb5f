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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace spinor3::cli {

/// Largest residual of one identity over a run. A sample fails when its
/// residual exceeds the tolerance it is judged against.
struct IdentityCheck {
    std::string suite;
    std::string name;
    double tolerance = 0.0;
    double max_residual = 0.0;
    std::size_t samples = 0;
    std::size_t failures = 0;

    void add(double residual);
    void add(double residual, double sample_tolerance);
    bool passed() const {
        return failures == 0;
    }
};

struct VerificationReport {
    std::string suite;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    std::vector<IdentityCheck> checks;

    bool passed() const;
    nlohmann::ordered_json to_json() const;
};

/// "all", "hopf", "covariance", "gauge", "ks", "so4".
bool is_suite_name(std::string_view name);
const std::vector<std::string> &suite_names();

/// Runs a suite deterministically. Throws std::invalid_argument for an
/// unknown suite name or samples == 0.
VerificationReport run_suite(std::string_view suite, std::size_t samples, std::uint64_t seed, double tolerance);

/// Replays newline-delimited fixture records; each record is judged against
/// its own stored tolerance. Throws std::runtime_error when the file cannot
/// be read and std::invalid_argument on malformed records.
VerificationReport replay_fixture_file(const std::string &path, double tolerance);

}  // namespace spinor3::cli
