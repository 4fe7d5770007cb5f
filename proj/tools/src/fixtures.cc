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

#include "spinor3/cli/fixtures.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinor3/gauge_fixing.h"
#include "spinor3/sampling.h"
#include "spinor3/spinor_maps.h"
#include "spinor3/tolerance.h"

#ifndef SPINOR3_VERSION
#define SPINOR3_VERSION "unknown"
#endif

namespace spinor3::cli {

using nlohmann::ordered_json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

DoubleCoverAngle checked_phi(double phi, Sheet sheet) {
    if (!std::isfinite(phi) || !in_canonical_range(phi)) {
        throw std::invalid_argument("phi must lie in (-2pi, 2pi]");
    }
    return DoubleCoverAngle(phi).lifted(sheet);
}

Vector3 cartesian_of(const FixtureInput &input) {
    const auto &v = input.values;
    switch (input.system) {
        case CoordinateSystem::cartesian:
            return {v[0], v[1], v[2]};
        case CoordinateSystem::spherical:
            return to_cartesian(SphericalPoint(v[0], v[1], checked_phi(v[2], input.sheet)));
        case CoordinateSystem::parabolic:
            return to_cartesian(ParabolicPoint(v[0], v[1], checked_phi(v[2], input.sheet)));
    }
    throw std::invalid_argument("unknown coordinate system");
}

Spinor construct_psi(const FixtureInput &input) {
    Vector3 v = cartesian_of(input);
    if (!v.is_finite()) {
        throw std::invalid_argument("coordinates must be finite");
    }
    double r = v.norm();
    if (r == 0.0) {
        throw std::invalid_argument("psi needs a nonzero point to define a direction");
    }
    Vector3 n = (1.0 / r) * v;
    DoubleCoverAngle gamma = input.system == CoordinateSystem::cartesian ? azimuth(v, input.sheet)
                                                                         : checked_phi(input.values[2], input.sheet);
    return psi_from_direction(n, gamma);
}

ordered_json vector_json(const Vector3 &v) {
    return ordered_json::array({v[0], v[1], v[2]});
}

Vector3 vector_from(const ordered_json &j, const char *what) {
    if (!j.is_array() || j.size() != 3) {
        throw std::invalid_argument(std::string(what) + " must be an array of 3 numbers");
    }
    return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

double max_scaled(const Vector3 &a, const Vector3 &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        m = std::max(m, scaled_difference(a[i], b[i]));
    }
    return m;
}

}  // namespace

CoordinateSystem parse_system(std::string_view name) {
    if (name == "cartesian") return CoordinateSystem::cartesian;
    if (name == "spherical") return CoordinateSystem::spherical;
    if (name == "parabolic") return CoordinateSystem::parabolic;
    throw std::invalid_argument("unknown coordinate system '" + std::string(name) + "'");
}

SpinorModel parse_model(std::string_view name) {
    if (name == "xi") return SpinorModel::xi;
    if (name == "eta") return SpinorModel::eta;
    if (name == "psi") return SpinorModel::psi;
    throw std::invalid_argument("unknown spinor model '" + std::string(name) + "'");
}

Sheet parse_sheet(std::string_view text) {
    if (text == "+1" || text == "1" || text == "principal") return Sheet::principal;
    if (text == "-1" || text == "flipped") return Sheet::flipped;
    throw std::invalid_argument("sheet must be +1 or -1");
}

std::string to_string(CoordinateSystem system) {
    switch (system) {
        case CoordinateSystem::cartesian:
            return "cartesian";
        case CoordinateSystem::spherical:
            return "spherical";
        case CoordinateSystem::parabolic:
            return "parabolic";
    }
    return "?";
}

std::string to_string(SpinorModel model) {
    switch (model) {
        case SpinorModel::xi:
            return "xi";
        case SpinorModel::eta:
            return "eta";
        case SpinorModel::psi:
            return "psi";
    }
    return "?";
}

std::string artifact_version() {
    return SPINOR3_VERSION;
}

Spinor construct_spinor(const FixtureInput &input, SpinorModel model) {
    const auto &v = input.values;
    if (model == SpinorModel::psi) {
        return construct_psi(input);
    }
    bool xi = model == SpinorModel::xi;
    switch (input.system) {
        case CoordinateSystem::cartesian:
            return xi ? xi_from_cartesian({v[0], v[1], v[2]}, input.sheet)
                      : eta_from_cartesian({v[0], v[1], v[2]}, input.sheet);
        case CoordinateSystem::spherical: {
            SphericalPoint p(v[0], v[1], checked_phi(v[2], input.sheet));
            return xi ? xi_from_spherical(p) : eta_from_spherical(p);
        }
        case CoordinateSystem::parabolic: {
            ParabolicPoint p(v[0], v[1], checked_phi(v[2], input.sheet));
            return xi ? xi_from_parabolic(p) : eta_from_parabolic(p);
        }
    }
    throw std::invalid_argument("unknown coordinate system");
}

void project_into(FixtureRecord &record) {
    record.quadruple = quadruple_from_spinor(record.spinor);
    record.a.reset();
    switch (record.model) {
        case SpinorModel::xi: {
            XiProjection p = project_xi(record.spinor);
            record.r = p.r;
            record.x = p.x;
            break;
        }
        case SpinorModel::eta: {
            EtaProjection p = project_eta(record.spinor);
            record.r = 0.5 * record.spinor.norm2();
            record.x = p.x;
            record.a = p.a;
            break;
        }
        case SpinorModel::psi:
            record.r = record.spinor.norm2();
            record.x = direction_of(record.spinor);
            break;
    }
}

FixtureRecord make_record(const FixtureInput &input, SpinorModel model, double tolerance,
                          std::optional<std::uint64_t> seed) {
    FixtureRecord record;
    record.input = input;
    record.model = model;
    record.spinor = construct_spinor(input, model);
    record.seed = seed;
    record.tolerance = tolerance;
    record.version = artifact_version();
    project_into(record);
    return record;
}

ordered_json to_json(const FixtureRecord &record) {
    const auto &v = record.input.values;
    ordered_json projection;
    projection["r"] = record.r;
    projection["x"] = vector_json(record.x);
    if (record.a) {
        projection["a"] = vector_json(*record.a);
    }
    const auto &q = record.quadruple.storage();
    ordered_json j;
    j["input"] = {{"system", to_string(record.input.system)},
                  {"values", ordered_json::array({v[0], v[1], v[2]})},
                  {"sheet", sign_of(record.input.sheet)}};
    j["model"] = to_string(record.model);
    j["spinor"] = ordered_json::array({ordered_json::array({record.spinor.c1().real(), record.spinor.c1().imag()}),
                                       ordered_json::array({record.spinor.c2().real(), record.spinor.c2().imag()})});
    j["quadruple"] = ordered_json::array({q[0], q[1], q[2], q[3]});
    j["projection"] = projection;
    j["meta"] = {{"seed", record.seed ? ordered_json(*record.seed) : ordered_json(nullptr)},
                 {"tolerance", record.tolerance},
                 {"version", record.version}};
    return j;
}

FixtureRecord record_from_json(const ordered_json &j) {
    try {
        FixtureRecord record;
        const auto &input = j.at("input");
        record.input.system = parse_system(input.at("system").get<std::string>());
        const auto &values = input.at("values");
        if (!values.is_array() || values.size() != 3) {
            throw std::invalid_argument("input.values must be an array of 3 numbers");
        }
        for (std::size_t i = 0; i < 3; ++i) {
            record.input.values[i] = values.at(i).get<double>();
        }
        int sheet = input.at("sheet").get<int>();
        if (sheet != 1 && sheet != -1) {
            throw std::invalid_argument("input.sheet must be +1 or -1");
        }
        record.input.sheet = sheet == 1 ? Sheet::principal : Sheet::flipped;
        record.model = parse_model(j.at("model").get<std::string>());

        const auto &spinor = j.at("spinor");
        if (!spinor.is_array() || spinor.size() != 2 || spinor.at(0).size() != 2 || spinor.at(1).size() != 2) {
            throw std::invalid_argument("spinor must be [[re, im], [re, im]]");
        }
        record.spinor = Spinor(Complex(spinor.at(0).at(0).get<double>(), spinor.at(0).at(1).get<double>()),
                               Complex(spinor.at(1).at(0).get<double>(), spinor.at(1).at(1).get<double>()));
        const auto &q = j.at("quadruple");
        if (!q.is_array() || q.size() != 4) {
            throw std::invalid_argument("quadruple must be an array of 4 numbers");
        }
        record.quadruple = KSQuadruple(q.at(0).get<double>(), q.at(1).get<double>(), q.at(2).get<double>(),
                                       q.at(3).get<double>());

        const auto &projection = j.at("projection");
        record.r = projection.at("r").get<double>();
        record.x = vector_from(projection.at("x"), "projection.x");
        if (projection.contains("a")) {
            record.a = vector_from(projection.at("a"), "projection.a");
        }

        const auto &meta = j.at("meta");
        if (!meta.at("seed").is_null()) {
            record.seed = meta.at("seed").get<std::uint64_t>();
        }
        record.tolerance = meta.at("tolerance").get<double>();
        if (!(record.tolerance > 0.0)) {
            throw std::invalid_argument("meta.tolerance must be positive");
        }
        record.version = meta.at("version").get<std::string>();
        return record;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed fixture record: ") + e.what());
    }
}

double replay_residual(const FixtureRecord &record) {
    FixtureRecord fresh = make_record(record.input, record.model, record.tolerance, record.seed);
    double m = 0.0;
    auto track = [&m](double stored, double recomputed) { m = std::max(m, scaled_difference(stored, recomputed)); };
    track(record.spinor.c1().real(), fresh.spinor.c1().real());
    track(record.spinor.c1().imag(), fresh.spinor.c1().imag());
    track(record.spinor.c2().real(), fresh.spinor.c2().real());
    track(record.spinor.c2().imag(), fresh.spinor.c2().imag());
    for (std::size_t i = 0; i < 4; ++i) {
        track(record.quadruple[i], fresh.quadruple[i]);
    }
    track(record.r, fresh.r);
    m = std::max(m, max_scaled(record.x, fresh.x));
    if (record.a.has_value() != fresh.a.has_value()) {
        return INFINITY;
    }
    if (record.a) {
        m = std::max(m, max_scaled(*record.a, *fresh.a));
    }
    return m;
}

std::vector<FixtureRecord> generate_fixtures(std::size_t count, std::uint64_t seed, double tolerance) {
    Sampler sampler(seed);
    std::vector<FixtureRecord> records;
    records.reserve(count);
    auto pick = [&sampler](int n) { return std::min(n - 1, static_cast<int>(sampler.uniform() * n)); };
    for (std::size_t k = 0; k < count; ++k) {
        FixtureInput input;
        input.system = static_cast<CoordinateSystem>(pick(3));
        SpinorModel model = static_cast<SpinorModel>(pick(3));
        input.sheet = pick(2) == 0 ? Sheet::principal : Sheet::flipped;
        double phi = kTwoPi - sampler.uniform(0.0, 2.0 * kTwoPi);
        switch (input.system) {
            case CoordinateSystem::cartesian: {
                Vector3 v = sampler.cube_point(10.0);
                input.values = {v[0], v[1], v[2]};
                break;
            }
            case CoordinateSystem::spherical:
                input.values = {sampler.uniform(0.1, 10.0), sampler.uniform(0.0, std::numbers::pi), phi};
                break;
            case CoordinateSystem::parabolic:
                input.values = {sampler.uniform(0.1, 3.0), sampler.uniform(0.1, 3.0), phi};
                break;
        }
        records.push_back(make_record(input, model, tolerance, seed));
    }
    return records;
}

}  // namespace spinor3::cli
