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

#include "spinor3/cli/app.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "spinor3/cli/fixtures.h"
#include "spinor3/cli/verification.h"
#include "spinor3/errors.h"
#include "spinor3/gauge_fixing.h"
#include "spinor3/rotation_algebra.h"
#include "spinor3/tolerance.h"

namespace spinor3::cli {

namespace {

using nlohmann::ordered_json;

/// Failure that maps to a specific exit status.
struct CommandError : std::runtime_error {
    CommandError(int code, const std::string &what) : std::runtime_error(what), exit_code(code) {
    }
    int exit_code;
};

struct CoordinateFlags {
    std::string system = "cartesian";
    std::string model = "xi";
    std::string sheet = "+1";
    std::vector<double> values;
};

void add_coordinate_flags(CLI::App *cmd, CoordinateFlags &flags) {
    cmd->add_option("--system", flags.system, "Coordinate system")
        ->check(CLI::IsMember({"cartesian", "spherical", "parabolic"}))
        ->capture_default_str();
    cmd->add_option("--model", flags.model, "Spinor model")->check(CLI::IsMember({"xi", "eta", "psi"}))->capture_default_str();
    cmd->add_option("--sheet", flags.sheet, "Double-cover sheet: +1 or -1")
        ->check(CLI::IsMember({"+1", "1", "-1", "principal", "flipped"}))
        ->capture_default_str();
    cmd->add_option("values", flags.values, "x1 x2 x3 | r theta phi | N M phi (radians)")->expected(3)->required();
}

FixtureInput input_from(const CoordinateFlags &flags) {
    FixtureInput input;
    input.system = parse_system(flags.system);
    input.sheet = parse_sheet(flags.sheet);
    std::copy_n(flags.values.begin(), 3, input.values.begin());
    return input;
}

/// Writes `text` to `path`, or to `out` when path is empty or "-".
void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw CommandError(kExitFailure, "cannot open '" + path + "' for writing");
    }
    file << text;
    file.close();
    if (!file) {
        throw CommandError(kExitFailure, "failed writing '" + path + "'");
    }
}

ordered_json rotation_json(const SpinorRotation &r) {
    return ordered_json::array({r.c4(), r.c()[0], r.c()[1], r.c()[2]});
}

ordered_json vector_json(const Vector3 &v) {
    return ordered_json::array({v[0], v[1], v[2]});
}

int cmd_convert(const CoordinateFlags &flags, double tolerance, const std::string &path, std::ostream &out) {
    FixtureRecord record = make_record(input_from(flags), parse_model(flags.model), tolerance);
    emit(to_json(record).dump() + "\n", path, out);
    return kExitSuccess;
}

int cmd_rotate(const CoordinateFlags &flags, const std::vector<double> &c, const std::string &path,
               std::ostream &out) {
    SpinorRotation rot = SpinorRotation::from_components(c[0], c[1], c[2], c[3]);
    FixtureRecord record = make_record(input_from(flags), parse_model(flags.model), kDefaultTolerance.absolute);
    FixtureRecord rotated = record;
    rotated.spinor = rotate_spinor(rot, record.spinor);
    project_into(rotated);

    Rotation3 o = so3_from_rotation(rot);
    Vector3 x = o * record.x;
    double residual = max_abs_diff(rotated.x, x);
    ordered_json vector_path = {{"r", record.r}, {"x", vector_json(x)}};
    if (record.a) {
        Vector3 a = o * *record.a;
        vector_path["a"] = vector_json(a);
        residual = std::max(residual, max_abs_diff(*rotated.a, a));
    }
    ordered_json rotated_json = to_json(rotated);
    ordered_json j;
    j["rotation"] = rotation_json(rot);
    j["input"] = to_json(record).at("input");
    j["model"] = flags.model;
    j["spinor_path"] = {{"spinor", rotated_json.at("spinor")},
                        {"quadruple", rotated_json.at("quadruple")},
                        {"projection", rotated_json.at("projection")}};
    j["vector_path"] = {{"projection", vector_path}};
    j["residual"] = residual;
    emit(j.dump() + "\n", path, out);
    return kExitSuccess;
}

int cmd_gauge(const std::vector<double> &values, const std::string &sign, const std::string &path,
              std::ostream &out) {
    Vector3 n(values[0], values[1], values[2]);
    if (!n.is_finite() || n.norm() == 0.0) {
        throw std::invalid_argument("direction must be a finite nonzero vector");
    }
    n = (1.0 / n.norm()) * n;
    Spinor psi = psi_from_direction(n);
    CanonicalGauge g = sign == "plus" ? canonical_phase_plus(psi) : canonical_phase_minus(psi);
    ordered_json j;
    j["n"] = vector_json(n);
    j["sign"] = sign;
    j["psi"] = ordered_json::array({ordered_json::array({psi.c1().real(), psi.c1().imag()}),
                                    ordered_json::array({psi.c2().real(), psi.c2().imag()})});
    j["gamma"] = g.gamma;
    j["a"] = rotation_json(g.solution.a);
    j["c"] = rotation_json(g.solution.c);
    j["C"] = vector_json(g.C.vector());
    emit(j.dump() + "\n", path, out);
    return kExitSuccess;
}

int cmd_verify(const std::string &suite, std::size_t samples, std::uint64_t seed, double tolerance,
               const std::string &fixtures, const std::string &path, std::ostream &out) {
    VerificationReport report;
    if (!fixtures.empty()) {
        try {
            report = replay_fixture_file(fixtures, tolerance);
        } catch (const std::runtime_error &e) {
            throw CommandError(kExitUsage, e.what());
        }
    } else {
        report = run_suite(suite, samples, seed, tolerance);
    }
    emit(report.to_json().dump() + "\n", path, out);
    return report.passed() ? kExitSuccess : kExitFailure;
}

int cmd_fixtures(std::size_t count, std::uint64_t seed, double tolerance, const std::string &path,
                 std::ostream &out) {
    std::string text;
    for (const FixtureRecord &record : generate_fixtures(count, seed, tolerance)) {
        text += to_json(record).dump();
        text += '\n';
    }
    emit(text, path, out);
    return kExitSuccess;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Spinor structure of 3-space: conversions, rotations, gauges and identity checks", "spinor3"};
    app.require_subcommand(1);
    app.set_version_flag("--version", artifact_version());

    std::string out_path;
    double tolerance = 1e-12;
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--out", out_path, "Output file (default: standard output)");
        cmd->add_option("--tolerance", tolerance, "Residual tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    CoordinateFlags coords;
    CLI::App *convert = app.add_subcommand("convert", "Construct a spinor and print its fixture record");
    add_coordinate_flags(convert, coords);
    add_common(convert);

    std::vector<double> rotation;
    CLI::App *rotate = app.add_subcommand("rotate", "Apply B(c) to a spinor and compare with O(c) on its projection");
    add_coordinate_flags(rotate, coords);
    rotate->add_option("--rotation", rotation, "c4,c1,c2,c3")->delimiter(',')->expected(4)->required();
    add_common(rotate);

    std::string suite = "all";
    std::size_t samples = 1000;
    std::uint64_t seed = 42;
    std::string fixtures_path;
    CLI::App *verify = app.add_subcommand("verify", "Run identity suites or replay a fixture file");
    verify->add_option("--suite", suite, "all|hopf|covariance|gauge|ks|so4")
        ->check(CLI::IsMember(suite_names()))
        ->capture_default_str();
    verify->add_option("--samples", samples, "Samples per identity")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    verify->add_option("--seed", seed, "Random seed")->capture_default_str();
    verify->add_option("--fixtures", fixtures_path, "Replay a newline-delimited fixture file");
    add_common(verify);

    std::string sign = "plus";
    std::vector<double> direction;
    CLI::App *gauge = app.add_subcommand("gauge", "Canonical-phase gauge of the spinor of a direction");
    gauge->add_option("--sign", sign, "plus|minus")->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
    gauge->add_option("n", direction, "n1 n2 n3 (normalized internally)")->expected(3)->required();
    add_common(gauge);

    std::size_t count = 100;
    std::uint64_t fixture_seed = 1;
    CLI::App *fixtures = app.add_subcommand("fixtures", "Write seeded golden fixture records");
    fixtures->add_option("--count", count, "Number of records")->capture_default_str();
    fixtures->add_option("--seed", fixture_seed, "Random seed")->capture_default_str();
    add_common(fixtures);
    fixtures->get_option("--out")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (convert->parsed()) {
            return cmd_convert(coords, tolerance, out_path, out);
        }
        if (rotate->parsed()) {
            return cmd_rotate(coords, rotation, out_path, out);
        }
        if (verify->parsed()) {
            return cmd_verify(suite, samples, seed, tolerance, fixtures_path, out_path, out);
        }
        if (gauge->parsed()) {
            return cmd_gauge(direction, sign, out_path, out);
        }
        if (fixtures->parsed()) {
            return cmd_fixtures(count, fixture_seed, tolerance, out_path, out);
        }
    } catch (const CommandError &e) {
        err << "spinor3: " << e.what() << "\n";
        return e.exit_code;
    } catch (const SingularGaugeError &e) {
        err << "spinor3: singular gauge: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument &e) {
        err << "spinor3: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "spinor3: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace spinor3::cli
