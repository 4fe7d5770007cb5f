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

#include <vector>

#include "benchmark/benchmark.h"
#include "spinor3/cli/verification.h"
#include "spinor3/spinor3.h"

using namespace spinor3;

namespace {

std::vector<Vector3> points(std::size_t n) {
    Sampler s(7);
    std::vector<Vector3> out;
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(s.cube_point(10.0));
    }
    return out;
}

std::vector<Spinor> unit_spinors(std::size_t n) {
    Sampler s(11);
    std::vector<Spinor> out;
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(s.unit_spinor());
    }
    return out;
}

}  // namespace

static void xi_construct_project(benchmark::State &state) {
    auto pts = points(1024);
    std::size_t k = 0;
    for (auto _ : state) {
        XiProjection p = project_xi(xi_from_cartesian(pts[k++ & 1023]));
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(xi_construct_project);

static void eta_construct_project(benchmark::State &state) {
    auto pts = points(1024);
    std::size_t k = 0;
    for (auto _ : state) {
        EtaProjection p = project_eta(eta_from_cartesian(pts[k++ & 1023]));
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(eta_construct_project);

static void compose_rotations(benchmark::State &state) {
    Sampler s(13);
    SpinorRotation a = s.haar_rotation(), b = s.haar_rotation();
    for (auto _ : state) {
        a = compose(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(compose_rotations);

static void so3_from_spinor_rotation(benchmark::State &state) {
    Sampler s(17);
    SpinorRotation a = s.haar_rotation();
    for (auto _ : state) {
        benchmark::DoNotOptimize(so3_from_rotation(a));
    }
}
BENCHMARK(so3_from_spinor_rotation);

static void gauge_plus_solution(benchmark::State &state) {
    auto psis = unit_spinors(1024);
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauge_plus(psis[k++ & 1023], 0.5));
    }
}
BENCHMARK(gauge_plus_solution);

static void canonical_gauge(benchmark::State &state) {
    auto psis = unit_spinors(1024);
    std::size_t k = 0;
    for (auto _ : state) {
        const Spinor &psi = psis[k++ & 1023];
        if (std::norm(psi.c1()) > 1e-6) {
            benchmark::DoNotOptimize(canonical_phase_plus(psi));
        }
    }
}
BENCHMARK(canonical_gauge);

static void rotation_between_spinors(benchmark::State &state) {
    auto psis = unit_spinors(1024);
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rotation_between(psis[k & 1023], psis[(k + 1) & 1023]));
        ++k;
    }
}
BENCHMARK(rotation_between_spinors);

static void ks_frame(benchmark::State &state) {
    Sampler s(19);
    NormalizedKS u = normalize_ks(s.gaussian_quadruple());
    Vector3 A(0.6, 0.0, 0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_frame(u, A, 0.3));
    }
}
BENCHMARK(ks_frame);

static void verify_suite(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(cli::run_suite("all", static_cast<std::size_t>(state.range(0)), 42, 1e-12));
    }
}
BENCHMARK(verify_suite)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
