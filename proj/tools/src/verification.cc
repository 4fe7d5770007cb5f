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

#include "spinor3/cli/verification.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "spinor3/cli/fixtures.h"
#include "spinor3/spinor3.h"

namespace spinor3::cli {

namespace {

constexpr double kPi = std::numbers::pi;
const Vector3 kNorth(0.0, 0.0, 1.0);
const Vector3 kSouth(0.0, 0.0, -1.0);

double linf(const Vector3 &v) {
    return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

// |a - b|_inf / max(1, |a|_inf, |b|_inf).
double vec_residual(const Vector3 &a, const Vector3 &b) {
    return max_abs_diff(a, b) / std::max({1.0, linf(a), linf(b)});
}

double spinor_residual(const Spinor &a, const Spinor &b) {
    double scale = std::max({1.0, std::sqrt(a.norm2()), std::sqrt(b.norm2())});
    return max_abs_diff(a, b) / scale;
}

double quad_residual(const KSQuadruple &a, const KSQuadruple &b) {
    double scale = std::max({1.0, std::sqrt(a.norm2()), std::sqrt(b.norm2())});
    return max_abs_diff(a, b) / scale;
}

template <std::size_t N>
double matrix_residual(const RealMatrix<N> &a, const RealMatrix<N> &b) {
    return (a - b).max_abs();
}

template <std::size_t N>
double group_residual(const SpecialOrthogonal<N> &m) {
    return std::max(m.orthogonality_residual(), std::abs(m.determinant() - 1.0));
}

/// Collects the checks of one suite in a stable order.
class SuiteRun {
   public:
    SuiteRun(VerificationReport &report, std::string suite) : report_(report), suite_(std::move(suite)) {
    }

    IdentityCheck &operator[](const std::string &name) {
        auto it = index_.find(name);
        if (it != index_.end()) {
            return report_.checks[it->second];
        }
        index_.emplace(name, report_.checks.size());
        IdentityCheck check;
        check.suite = suite_;
        check.name = name;
        check.tolerance = report_.tolerance;
        report_.checks.push_back(check);
        return report_.checks.back();
    }

   private:
    VerificationReport &report_;
    std::string suite_;
    std::map<std::string, std::size_t> index_;
};

Sheet random_sheet(Sampler &s) {
    return s.uniform() < 0.5 ? Sheet::principal : Sheet::flipped;
}

void hopf_suite(VerificationReport &report, std::size_t samples, Sampler &s) {
    SuiteRun run(report, "hopf");
    for (std::size_t k = 0; k < samples; ++k) {
        Vector3 v = s.cube_point(10.0);
        Sheet sheet = random_sheet(s);
        double r = v.norm();

        Spinor xi = xi_from_cartesian(v, sheet);
        XiProjection px = project_xi(xi);
        run["xi_round_trip"].add(std::max(scaled_difference(px.r, r), vec_residual(px.x, v)));
        KSQuadruple U = quadruple_from_spinor(xi);
        run["xi_constraint"].add(std::abs(xi_constraint_residual(U)) / std::max(1.0, U.norm2()));
        double r_from_u = 0.5 * U.norm2();
        run["xi_hopf_norm"].add(scaled_difference(px.x.norm2(), r_from_u * r_from_u));

        Spinor eta = eta_from_cartesian(v, sheet);
        EtaProjection pe = project_eta(eta);
        run["eta_round_trip"].add(vec_residual(pe.x, v));
        run["eta_a3_zero"].add(std::abs(pe.a[2]) / std::max(1.0, r));
        KSQuadruple V = quadruple_from_spinor(eta);
        run["eta_constraint"].add(std::abs(eta_constraint_residual(V)) / std::max(1.0, V.norm2()));
        run["eta_hopf_norm"].add(scaled_difference(pe.x.norm2(), 0.25 * V.norm2() * V.norm2()));

        // Same point in the other two coordinate systems.
        double rho = std::hypot(v[0], v[1]);
        DoubleCoverAngle phi = azimuth(v, sheet);
        SphericalPoint sp(r, std::atan2(rho, v[2]), phi);
        ParabolicPoint pp(std::sqrt(r + v[2]), std::sqrt(r - v[2]), phi);
        run["coordinate_agreement"].add(std::max({spinor_residual(xi_from_spherical(sp), xi),
                                                  spinor_residual(xi_from_parabolic(pp), xi),
                                                  spinor_residual(eta_from_spherical(sp), eta),
                                                  spinor_residual(eta_from_parabolic(pp), eta)}));

        // phi -> phi + 2 pi negates, phi -> phi + 4 pi is the identity.
        SphericalPoint sp2(r, sp.theta(), phi.opposite());
        SphericalPoint sp4(r, sp.theta(), phi + 4.0 * kPi);
        ParabolicPoint pp2(pp.n(), pp.m(), phi.opposite());
        Spinor xi_flip = xi_from_cartesian(v, sheet == Sheet::principal ? Sheet::flipped : Sheet::principal);
        double negation = std::max({spinor_residual(xi_from_spherical(sp2), -xi_from_spherical(sp)),
                                    spinor_residual(eta_from_spherical(sp2), -eta_from_spherical(sp)),
                                    spinor_residual(xi_from_parabolic(pp2), -xi_from_parabolic(pp)),
                                    spinor_residual(eta_from_parabolic(pp2), -eta_from_parabolic(pp)),
                                    spinor_residual(xi_flip, -xi)});
        run["double_cover_negation"].add(negation);
        run["double_cover_identity"].add(std::max(spinor_residual(xi_from_spherical(sp4), xi_from_spherical(sp)),
                                                  spinor_residual(eta_from_spherical(sp4), eta_from_spherical(sp))));
        XiProjection px_flip = project_xi(xi_flip);
        EtaProjection pe_flip = project_eta(-eta);
        run["double_cover_projection"].add(std::max({vec_residual(px_flip.x, px.x), vec_residual(pe_flip.x, pe.x),
                                                     vec_residual(pe_flip.a, pe.a)}));
    }
}

void covariance_suite(VerificationReport &report, std::size_t samples, Sampler &s) {
    SuiteRun run(report, "covariance");
    for (std::size_t k = 0; k < samples; ++k) {
        SpinorRotation rot = s.haar_rotation();
        SpinorRotation rot2 = s.haar_rotation();
        Vector3 v = s.cube_point(10.0);
        Rotation3 o = so3_from_rotation(rot);

        Spinor xi = xi_from_cartesian(v);
        run["xi_covariance"].add(vec_residual(project_xi(rotate_spinor(rot, xi)).x, o * v));

        Spinor eta = eta_from_cartesian(v);
        EtaProjection before = project_eta(eta);
        EtaProjection after = project_eta(rotate_spinor(rot, eta));
        run["eta_covariance"].add(std::max(vec_residual(after.x, o * before.x), vec_residual(after.a, o * before.a)));

        run["extract_so3_matches_parameter_form"].add(matrix_residual(extract_so3(rot).matrix(), o.matrix()));
        run["so3_double_cover"].add(matrix_residual(so3_from_rotation(rot.negated()).matrix(), o.matrix()));
        run["su2_real4_homomorphism"].add(
            matrix_residual(su2_real4(compose(rot, rot2)).matrix(), (su2_real4(rot) * su2_real4(rot2)).matrix()));
        run["su2_real4_action"].add(quad_residual(quadruple_from_spinor(rotate_spinor(rot, xi)),
                                                  su2_real4(rot) * quadruple_from_spinor(xi)));
        run["group_membership"].add(std::max({group_residual(o), group_residual(su2_real4(rot))}));
    }
}

void so4_suite(VerificationReport &report, std::size_t samples, Sampler &s) {
    SuiteRun run(report, "so4");
    for (std::size_t k = 0; k < samples; ++k) {
        Spinor z = s.gaussian_spinor();
        run["eta_xi_involution"].add(
            std::max(spinor_residual(xi_from_eta(eta_from_xi(z)), z), spinor_residual(eta_from_xi(xi_from_eta(z)), z)));
        KSQuadruple u = quadruple_from_spinor(z);
        run["u_to_v_matches_eta_from_xi"].add(quad_residual(u_to_v(u), quadruple_from_spinor(eta_from_xi(z))));
        run["v_to_u_inverts_u_to_v"].add(quad_residual(v_to_u(u_to_v(u)), u));
        run["u_to_v_norm"].add(scaled_difference(u_to_v(u).norm2(), u.norm2()));

        HalfSpaceSign delta = s.uniform() < 0.5 ? HalfSpaceSign::plus : HalfSpaceSign::minus;
        Spinor reflected = cartan_reflect(z, delta);
        EtaProjection e = project_eta(z);
        EtaProjection e_ref = project_eta(reflected);
        run["cartan_pseudovector_invariance"].add(vec_residual(project_xi(reflected).x, project_xi(z).x));
        run["cartan_vector_flip"].add(std::max(vec_residual(e_ref.x, -e.x), vec_residual(e_ref.a, -e.a)));

        Plane plane = kAllPlanes[std::min<std::size_t>(5, static_cast<std::size_t>(s.uniform() * 6))];
        double alpha = s.uniform(-kPi, kPi);
        double beta = s.uniform(-kPi, kPi);
        run["elementary_one_parameter_subgroup"].add(
            matrix_residual((elementary_so4(plane, alpha) * elementary_so4(plane, beta)).matrix(),
                            elementary_so4(plane, alpha + beta).matrix()));
    }

    Rotation4 sm = s_matrix();
    run["s_orthogonal_det_one"].add(group_residual(sm));
    SFactorization f = s_factorization_check();
    run["s_factorization"].add(f.residual);
    run["s_factors_commute"].add(f.commutator);
    Su2ImageMatch outside = s_outside_su2_image();
    // Certificate: contradictory entries exist and no parameter fits within 0.1.
    run["s_outside_su2_image"].add(outside.conflicts.empty() || outside.residual <= 0.1 ? 1.0 : 0.0);
}

void ks_suite(VerificationReport &report, std::size_t samples, Sampler &s) {
    SuiteRun run(report, "ks");
    for (std::size_t k = 0; k < samples; ++k) {
        NormalizedKS u = normalize_ks(s.gaussian_quadruple());
        NormalizedKS uh = hat(u);
        Vector3 n = direction_from_ks(u);
        Rotation3 o_hat = extract_so3(uh.as_rotation());
        run["direction_from_third_column"].add(
            max_abs_diff(n, Vector3(-o_hat(0, 2), -o_hat(1, 2), -o_hat(2, 2))));
        run["direction_unit"].add(std::abs(n.norm() - 1.0));
        run["hopf_direction_identity"].add(hopf_direction_residual(u));
        run["hat_involution"].add(max_abs_diff(hat(uh).u(), u.u()));

        SpinorRotation c1 = s.haar_rotation();
        SpinorRotation c2 = s.haar_rotation();
        NormalizedKS moved = left_transport(c1, u);
        run["transport_direction"].add(vec_residual(direction_from_ks(moved), so3_from_rotation(c1) * n));
        run["transport_routes_agree"].add(max_abs_diff(moved.u(), left_transport_unhatted(c1, u).u()));
        run["transport_left_action"].add(
            max_abs_diff(left_transport(c2, moved).u(), left_transport(compose(c2, c1), u).u()));

        Vector3 A = s.unit_vector();
        while (A[2] < -1.0 + 1e-6) {
            A = s.unit_vector();
        }
        double phase = s.uniform(-kPi, kPi);
        KSFrame frame = build_frame(u, A, phase);
        run["frame_identity"].add(frame_identity_residual(frame, n));
        Vector3 n_prime = rotated_direction(frame, n);
        run["rotated_direction_identity"].add(rotated_direction_residual(frame, n_prime));
        SpinorRotation sym = frame_symmetry(u, frame);
        SpinorRotation reached = compose(sym, compose(uh.as_rotation(), sigma3_phase(phase)));
        SpinorRotation w_hat = hat(frame.w.as_rotation());
        run["frame_symmetry"].add(std::min(max_abs_diff(reached, w_hat), max_abs_diff(reached.negated(), w_hat)));

        Spinor xi = Complex(1.0 / std::numbers::sqrt2) * xi_from_cartesian(s.unit_vector());
        KSQuadruple q = quadruple_from_spinor(xi);
        double alpha = s.uniform(-kPi, kPi);
        run["phase_constraint_law"].add(std::abs(
            hopf_constraint_residual(quadruple_from_spinor(phase_rotate(xi, alpha))) - phase_constraint_law(q, alpha)));
        double quarter_turns = 0.0;
        for (int m = 0; m < 4; ++m) {
            quarter_turns = std::max(
                quarter_turns,
                std::abs(hopf_constraint_residual(quadruple_from_spinor(phase_rotate(xi, m * kPi / 2.0)))));
        }
        run["phase_quarter_turns_keep_constraint"].add(quarter_turns);
    }
}

void gauge_suite(VerificationReport &report, std::size_t samples, Sampler &s) {
    SuiteRun run(report, "gauge");
    for (std::size_t k = 0; k < samples; ++k) {
        Spinor psi = s.unit_spinor();
        double gamma = s.uniform(-2.0 * kPi, 2.0 * kPi);
        KSQuadruple u = quadruple_from_spinor(psi);
        double u1 = u.q1(), u2 = u.q2(), u3 = u.q3(), u4 = u.q4();
        double co = std::cos(0.5 * gamma), si = std::sin(0.5 * gamma);

        GaugeSolution plus = gauge_plus(psi, gamma);
        run["gauge_plus_target"].add(
            std::max(max_abs_diff(rotate_spinor(plus.c, psi), gauge_plus_target(gamma)),
                     max_abs_diff(rotate_spinor(plus.a, psi), Spinor(1.0, 0.0))));
        SpinorRotation plus_explicit = SpinorRotation::from_components(-si * u2 + co * u1, co * u4 + si * u3,
                                                                       si * u4 - co * u3, co * u2 + si * u1);
        run["gauge_plus_explicit_c"].add(max_abs_diff(plus.c, plus_explicit));

        GaugeSolution minus = gauge_minus(psi, gamma);
        run["gauge_minus_target"].add(
            std::max(max_abs_diff(rotate_spinor(minus.c, psi), gauge_minus_target(gamma)),
                     max_abs_diff(rotate_spinor(minus.a, psi), Spinor(0.0, 1.0))));
        SpinorRotation minus_explicit = SpinorRotation::from_components(si * u4 + co * u3, co * u2 - si * u1,
                                                                        si * u2 + co * u1, -co * u4 + si * u3);
        run["gauge_minus_explicit_c"].add(max_abs_diff(minus.c, minus_explicit));

        Vector3 n = direction_of(psi);
        double theta = std::atan2(std::hypot(n[0], n[1]), n[2]);
        if (1.0 + n[2] > 1e-6) {
            CanonicalGauge g = canonical_phase_plus(psi);
            run["canonical_plus_aligns"].add(vec_residual(so3_from_vector_parameter(g.C) * n, kNorth));
            run["canonical_plus_modulus"].add(scaled_difference(g.C.modulus(), std::tan(0.5 * theta)));
            run["canonical_plus_flat"].add(
                std::max(std::abs(g.solution.c.c()[2]),
                         vec_residual(g.C.vector(), flat_vector_parameter_plus(n).vector())));
        }
        if (1.0 - n[2] > 1e-6) {
            CanonicalGauge g = canonical_phase_minus(psi);
            run["canonical_minus_aligns"].add(vec_residual(so3_from_vector_parameter(g.C) * n, kSouth));
            run["canonical_minus_modulus"].add(scaled_difference(g.C.modulus(), std::tan(0.5 * (kPi - theta))));
            run["canonical_minus_flat"].add(
                std::max(std::abs(g.solution.c.c()[2]),
                         vec_residual(g.C.vector(), flat_vector_parameter_minus(n).vector())));
        }

        SpinorRotation planted = s.haar_rotation();
        Spinor target = rotate_spinor(planted, psi);
        SpinorRotation found = rotation_between(psi, target);
        run["rotation_between_recovers_planted"].add(
            std::min(max_abs_diff(found, planted), max_abs_diff(found.negated(), planted)));
        run["rotation_between_target"].add(max_abs_diff(rotate_spinor(found, psi), target));
        run["rotation_between_linear_agrees"].add(max_abs_diff(rotation_between_linear(psi, target), found));

        SpinorRotation id = SpinorRotation::identity();
        run["stabilizer_trivial"].add(std::max(max_abs_diff(stabilizer_check(psi, +1), id),
                                               max_abs_diff(stabilizer_check(psi, -1), id.negated())));
    }
}

using SuiteFn = std::function<void(VerificationReport &, std::size_t, Sampler &)>;

const std::vector<std::pair<std::string, SuiteFn>> &suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"hopf", hopf_suite}, {"covariance", covariance_suite}, {"so4", so4_suite},
        {"ks", ks_suite},     {"gauge", gauge_suite},
    };
    return table;
}

}  // namespace

void IdentityCheck::add(double residual) {
    add(residual, tolerance);
}

void IdentityCheck::add(double residual, double sample_tolerance) {
    ++samples;
    if (std::isnan(residual) || std::isnan(max_residual)) {
        max_residual = std::numeric_limits<double>::quiet_NaN();
    } else {
        max_residual = std::max(max_residual, residual);
    }
    if (!(residual <= sample_tolerance)) {
        ++failures;
    }
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck &c) { return c.passed(); });
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json identities = nlohmann::ordered_json::array();
    for (const auto &c : checks) {
        identities.push_back({{"suite", c.suite},
                              {"name", c.name},
                              {"max_residual", c.max_residual},
                              {"samples", c.samples},
                              {"failures", c.failures},
                              {"tolerance", c.tolerance},
                              {"pass", c.passed()}});
    }
    return {{"suite", suite},      {"samples", samples},       {"seed", seed}, {"tolerance", tolerance},
            {"pass", passed()},    {"identities", identities}};
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {"all", "hopf", "covariance", "gauge", "ks", "so4"};
    return names;
}

bool is_suite_name(std::string_view name) {
    const auto &names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport run_suite(std::string_view suite, std::size_t samples, std::uint64_t seed, double tolerance) {
    if (!is_suite_name(suite)) {
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
    if (samples == 0) {
        throw std::invalid_argument("samples must be at least 1");
    }
    VerificationReport report;
    report.suite = std::string(suite);
    report.samples = samples;
    report.seed = seed;
    report.tolerance = tolerance;
    std::uint64_t stream = 0;
    for (const auto &[name, fn] : suite_table()) {
        ++stream;
        if (suite != "all" && suite != name) {
            continue;
        }
        // Each suite draws from its own stream so `all` and a single suite agree.
        Sampler sampler(seed * 0x9E3779B97F4A7C15ull + stream);
        fn(report, samples, sampler);
    }
    return report;
}

VerificationReport replay_fixture_file(const std::string &path, double tolerance) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read fixture file '" + path + "'");
    }
    VerificationReport report;
    report.suite = "fixtures";
    report.tolerance = tolerance;
    IdentityCheck check;
    check.suite = "fixtures";
    check.name = "fixture_replay";
    check.tolerance = tolerance;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        nlohmann::ordered_json j;
        try {
            j = nlohmann::ordered_json::parse(line);
        } catch (const nlohmann::json::parse_error &e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
        FixtureRecord record = record_from_json(j);
        if (record.seed) {
            report.seed = *record.seed;
        }
        check.add(replay_residual(record), record.tolerance);
    }
    report.samples = check.samples;
    report.checks.push_back(check);
    return report;
}

}  // namespace spinor3::cli
