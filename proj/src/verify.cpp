#include "qstep/verify.hpp"

#include <algorithm>
#include <cmath>

#include "qstep/errors.hpp"
#include "qstep/format.hpp"
#include "qstep/ghshift.hpp"
#include "qstep/rng.hpp"

namespace qstep {

namespace {

constexpr cplx imag_unit{0.0, 1.0};

constexpr double tol_continuity = 1e-11;
constexpr double tol_schrodinger = 1e-10;
constexpr double tol_equivalence = 1e-11;
constexpr double tol_phase_amplitude = 1e-10;

/// Channel mixers that make the region-II plane-wave elements exact
/// solutions of the wave equation: denominator 1 + sqrt(1 - v2^2 - v3^2)
/// instead of 1 + N^2. The two coincide for complex-kind (both zero) and
/// pure-quaternionic potentials; they differ when v1 and (v2, v3) are both
/// nonzero, where the closed-form mixers are only first-order accurate.
std::pair<cplx, cplx> exact_mixers(const PotentialSpec& potential) {
    const double s = std::sqrt(1.0 - potential.transverse_sq());
    const cplx alpha = imag_unit * cplx(potential.v2, potential.v3) / (1.0 + s);
    const cplx beta = -imag_unit * cplx(potential.v2, -potential.v3) / (1.0 + s);
    return {alpha, beta};
}

double wrap_angle(double delta) {
    while (delta > M_PI) delta -= 2.0 * M_PI;
    while (delta < -M_PI) delta += 2.0 * M_PI;
    return delta;
}

std::string kind_name(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::Complex: return "complex";
        case PotentialKind::PureQuaternionic: return "purequat";
        case PotentialKind::General: return "general";
    }
    return "unknown";
}

std::string scenario_digest(const ScatterScenario& sc) {
    std::string out = kind_name(sc.potential.kind);
    out += " v1=" + format_double(sc.potential.v1);
    out += " v2=" + format_double(sc.potential.v2);
    out += " v3=" + format_double(sc.potential.v3);
    out += " theta=" + format_double(sc.theta);
    out += " p=" + format_double(sc.p);
    return out;
}

}  // namespace

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRecord& c) { return c.passed; });
}

double verify_continuity(const AmplitudeSet& a, const ScatterScenario& scenario) {
    const Kinematics k = kinematics(scenario);
    const double pz = k.p_z;
    const double qt = k.qt_abs;

    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double y = -1.75 + 0.5 * i;
        const cplx e = std::exp(imag_unit * k.p_y * y);

        const Quaternion value_left = from_split((1.0 + a.r) * e, a.rt * e);
        const Quaternion value_right =
            from_split((a.t + a.alpha * a.tt) * e, (a.beta * a.t + a.tt) * e);

        const Quaternion deriv_left =
            from_split(imag_unit * pz * (1.0 - a.r) * e, pz * a.rt * e);
        const Quaternion deriv_right =
            from_split((imag_unit * k.q_z * a.t - a.alpha * qt * a.tt) * e,
                       (imag_unit * a.beta * k.q_z * a.t - qt * a.tt) * e);

        worst = std::max(worst, (value_left - value_right).norm());
        worst = std::max(worst, (deriv_left - deriv_right).norm());
    }
    return worst;
}

double schrodinger_element_residual(const PotentialSpec& potential, double p,
                                    const Quaternion& u, double k_y, cplx w,
                                    Region region) {
    const double energy = p * p;  // E = p^2 / (2m) with m = 1/2
    const Quaternion h_v{0.0, potential.v1 * energy, potential.v2 * energy,
                         potential.v3 * energy};
    // lap of exp(i k_y y + w z) in closed form.
    const cplx laplace_factor = -k_y * k_y + w * w;

    SplitMix64 rng(0x5ca77e21u);
    double worst = 0.0;
    for (int i = 0; i < 16; ++i) {
        const double y = rng.uniform(-2.0, 2.0);
        const double z = region == Region::II ? rng.uniform(0.0, 2.0)
                                              : rng.uniform(-2.0, 0.0);
        const cplx f = std::exp(imag_unit * k_y * y + w * z);
        const Quaternion psi = u * embed(f);
        const Quaternion kinetic = -1.0 * (quat_i * (u * embed(laplace_factor * f)));
        const Quaternion lhs = energy * (psi * quat_i);
        worst = std::max(worst, (kinetic + h_v * psi - lhs).norm());
    }
    return worst;
}

double verify_schrodinger(const ScatterScenario& scenario, Region region) {
    const double p = scenario.p;
    const double p_y = p * std::sin(scenario.theta);
    const double p_z = p * std::cos(scenario.theta);
    double worst = 0.0;

    if (region == Region::I) {
        const PotentialSpec free_region(0.0, 0.0, 0.0);
        worst = schrodinger_element_residual(free_region, p, quat_one, p_y,
                                             imag_unit * p_z, Region::I);
        worst = std::max(worst,
                         schrodinger_element_residual(free_region, p, quat_one, p_y,
                                                      -imag_unit * p_z, Region::I));
        // Free evanescent j-channel grows toward the step from the left; its
        // decay rate p sqrt(1 + sin^2) comes from the evanescent dispersion
        // relation with the potential switched off.
        const double kappa = std::sqrt(p * p + p_y * p_y);
        worst = std::max(worst, schrodinger_element_residual(free_region, p, quat_j,
                                                             p_y, cplx(kappa, 0.0),
                                                             Region::I));
        return worst;
    }

    const Kinematics k = kinematics(scenario);
    const auto [alpha, beta] = exact_mixers(scenario.potential);
    const Quaternion propagating = quat_one + quat_j * embed(beta);
    const Quaternion evanescent = embed(alpha) + quat_j;
    worst = schrodinger_element_residual(scenario.potential, p, propagating, k.p_y,
                                         imag_unit * k.q_z, Region::II);
    worst = std::max(worst,
                     schrodinger_element_residual(scenario.potential, p, evanescent,
                                                  k.p_y, cplx(-k.qt_abs, 0.0),
                                                  Region::II));
    return worst;
}

namespace {

void run_checks(const ScatterScenario& sc, double perturbation,
                std::vector<CheckRecord>& out) {
    const std::string digest = scenario_digest(sc);
    const auto add = [&](const std::string& name, double residual, double tol) {
        out.push_back({name, digest, residual, tol, residual <= tol});
    };

    AmplitudeSet amps = solve_matching(sc);
    amps.r += perturbation;
    add("continuity", verify_continuity(amps, sc), tol_continuity);
    add("schrodinger_region_I", verify_schrodinger(sc, Region::I), tol_schrodinger);
    add("schrodinger_region_II", verify_schrodinger(sc, Region::II), tol_schrodinger);

    const cplx r_general = reflection_quat_general(sc);
    add("closed_general_vs_solver", std::abs(r_general - amps.r), tol_equivalence);

    const Regime regime = classify_regime(sc);
    switch (sc.potential.kind) {
        case PotentialKind::Complex: {
            const cplx r = reflection_complex(sc);
            add("closed_complex_vs_solver", std::abs(r - amps.r), tol_equivalence);
            if (regime == Regime::AboveCritical) {
                const cplx predicted = std::exp(-2.0 * imag_unit * phase_complex(sc));
                add("phase_amplitude", std::abs(predicted - r), tol_phase_amplitude);
            } else {
                add("phase_amplitude", std::abs(std::arg(r)), tol_phase_amplitude);
            }
            break;
        }
        case PotentialKind::PureQuaternionic: {
            const cplx r = reflection_quat_pure(sc);
            add("closed_pure_vs_solver", std::abs(r - amps.r), tol_equivalence);
            if (regime == Regime::AboveCritical) {
                const cplx predicted = std::exp(-2.0 * imag_unit * phase_quat_above(sc));
                add("phase_amplitude", std::abs(predicted - r), tol_phase_amplitude);
            } else {
                const auto [phi_num, phi_den] = phases_quat_below(sc);
                add("phase_amplitude",
                    std::abs(wrap_angle(std::arg(r) - (phi_num - phi_den))),
                    tol_phase_amplitude);
            }
            break;
        }
        case PotentialKind::General:
            break;
    }
}

}  // namespace

VerificationReport run_suite(std::uint64_t seed, int count) {
    return run_suite(seed, count, 0.0);
}

VerificationReport run_suite(std::uint64_t seed, int count, double perturbation) {
    if (count < 1) throw DomainError("run_suite: count must be >= 1");

    VerificationReport report;
    report.seed = seed;
    SplitMix64 rng(seed);

    const PotentialKind kinds[] = {PotentialKind::Complex,
                                   PotentialKind::PureQuaternionic,
                                   PotentialKind::General};
    for (const PotentialKind kind : kinds) {
        for (int i = 0; i < count; ++i) {
            const double n2 = rng.uniform(0.1, 0.9);
            const double vphase = rng.uniform(0.0, 2.0 * M_PI);

            PotentialSpec potential(0.0, 0.0, 0.0);
            switch (kind) {
                case PotentialKind::Complex:
                    potential = PotentialSpec::complex_step(1.0 - n2);
                    break;
                case PotentialKind::PureQuaternionic:
                    potential = PotentialSpec::pure_quaternionic(
                        std::sqrt(1.0 - n2 * n2), vphase);
                    break;
                case PotentialKind::General: {
                    // Split the index budget: v1 takes a random fraction and
                    // (v2, v3) are sized so that N^2 stays equal to n2.
                    const double v1 = rng.uniform(0.1, 0.9) * (1.0 - n2);
                    const double inner = n2 + v1;
                    const double vmod = std::sqrt(1.0 - inner * inner);
                    potential = PotentialSpec(v1, vmod * std::cos(vphase),
                                              vmod * std::sin(vphase));
                    break;
                }
            }

            const double theta_c = std::asin(std::sqrt(n2));
            double theta = rng.uniform(1e-3, M_PI_2 - 1e-3);
            while (std::abs(theta - theta_c) < 1e-3) {
                theta = rng.uniform(1e-3, M_PI_2 - 1e-3);
            }

            run_checks(ScatterScenario(theta, 1.0, potential), perturbation,
                       report.checks);
        }
    }
    return report;
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckRecord& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"scenario", c.scenario},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed}});
    }
    return {{"seed", report.seed}, {"checks", std::move(checks)}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport report;
    report.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("checks")) {
        report.checks.push_back({c.at("name").get<std::string>(),
                                 c.at("scenario").get<std::string>(),
                                 c.at("residual").get<double>(),
                                 c.at("tolerance").get<double>(),
                                 c.at("passed").get<bool>()});
    }
    return report;
}

}  // namespace qstep
