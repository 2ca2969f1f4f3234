// Command-line front end: single-point queries, theta sweeps (CSV), and the
// verification suite (JSON). Angles are radians unless --deg is given.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstep/errors.hpp"
#include "qstep/ghshift.hpp"
#include "qstep/media.hpp"
#include "qstep/scatter.hpp"
#include "qstep/verify.hpp"

namespace {

using nlohmann::json;
using namespace qstep;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;
constexpr int exit_unwritable = 4;

struct PotentialArgs {
    std::string kind;
    double v1 = 0.0;
    double vmod = 0.0;
    double vphase = 0.0;
};

void add_potential_flags(CLI::App* cmd, PotentialArgs& args) {
    cmd->add_option("--kind", args.kind, "Potential kind: complex | purequat")
        ->required()
        ->check(CLI::IsMember({"complex", "purequat"}));
    cmd->add_option("--v1", args.v1, "V1/E for --kind complex");
    cmd->add_option("--vmod", args.vmod, "sqrt(V2^2+V3^2)/E for --kind purequat");
    cmd->add_option("--vphase", args.vphase, "phase of V2 + i V3 (radians)");
}

PotentialSpec build_potential(const PotentialArgs& args) {
    if (args.kind == "complex") return PotentialSpec::complex_step(args.v1);
    return PotentialSpec::pure_quaternionic(args.vmod, args.vphase);
}

std::string regime_name(Regime regime) {
    switch (regime) {
        case Regime::BelowCritical: return "below_critical";
        case Regime::Critical: return "critical";
        case Regime::AboveCritical: return "above_critical";
    }
    return "unknown";
}

/// Shared double formatting for CSV cells and JSON values, so point output
/// and sweep rows agree to the last printed digit.
std::string render_double(double v) { return json(v).dump(); }

json complex_json(const cplx& c) {
    return {{"re", c.real()}, {"im", c.imag()}};
}

cplx closed_form_reflection(const ScatterScenario& sc) {
    return sc.potential.kind == PotentialKind::Complex ? reflection_complex(sc)
                                                       : reflection_quat_pure(sc);
}

/// One output sink: stdout by default, file when --out given.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::ios_base::failure("cannot open " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

int cmd_point(const PotentialArgs& pot_args, double theta, bool deg, double p,
              const std::string& out_path) {
    if (deg) theta *= M_PI / 180.0;
    const ScatterScenario sc(theta, p, build_potential(pot_args));

    const Kinematics k = kinematics(sc);
    const AmplitudeSet amps = solve_matching(sc);
    const cplx r = closed_form_reflection(sc);
    const ShiftResult shift = lateral_shift(sc, ShiftMethod::Analytic);
    const double index = refractive_index_quat(sc.potential);

    json out{
        {"kind", pot_args.kind},
        {"v1", sc.potential.v1},
        {"v2", sc.potential.v2},
        {"v3", sc.potential.v3},
        {"theta_rad", sc.theta},
        {"p", sc.p},
        {"index", index},
        {"regime", regime_name(shift.regime)},
        {"kinematics",
         {{"p_y", k.p_y},
          {"p_z", k.p_z},
          {"q_z", complex_json(k.q_z)},
          {"qt_abs", k.qt_abs}}},
        {"amplitudes",
         {{"R", complex_json(amps.r)},
          {"Rt", complex_json(amps.rt)},
          {"T", complex_json(amps.t)},
          {"Tt", complex_json(amps.tt)},
          {"alpha", complex_json(amps.alpha)},
          {"beta", complex_json(amps.beta)}}},
        {"abs_R", std::abs(r)},
        {"arg_R", std::arg(r) + 0.0},
        {"phase_gh", shift.phase},
    };
    if (index <= 1.0) {
        out["critical_angle_rad"] = critical_angle(index);
    } else {
        out["critical_angle_rad"] = nullptr;
    }
    if (sc.potential.kind == PotentialKind::PureQuaternionic &&
        shift.regime == Regime::BelowCritical) {
        const auto [phi_num, phi_den] = phases_quat_below(sc);
        out["phase_gh_num"] = phi_num;
        out["phase_gh_den"] = phi_den;
    }
    if (std::isfinite(shift.shift_adim)) {
        out["shift_adim"] = shift.shift_adim;
    } else {
        out["shift_adim"] = "inf";
    }

    OutputTarget target(out_path);
    target.stream() << out.dump(2) << "\n";
    return exit_ok;
}

int cmd_sweep(const PotentialArgs& pot_args, double theta_min, double theta_max,
              int steps, bool deg, double p, const std::string& out_path) {
    if (deg) {
        theta_min *= M_PI / 180.0;
        theta_max *= M_PI / 180.0;
    }
    if (!(theta_min >= 0.0) || !(theta_min < theta_max) || !(theta_max < M_PI_2)) {
        throw DomainError("sweep: need 0 <= theta_min < theta_max < pi/2");
    }
    if (steps < 2) throw DomainError("sweep: need at least 2 steps");

    const PotentialSpec potential = build_potential(pot_args);
    OutputTarget target(out_path);
    std::ostream& os = target.stream();
    os << "theta_rad,abs_R,arg_R,phase_gh,shift_adim,regime\n";

    for (int i = 0; i < steps; ++i) {
        const double theta =
            theta_min + (theta_max - theta_min) * i / double(steps - 1);
        const ScatterScenario sc(theta, p, potential);
        const cplx r = closed_form_reflection(sc);
        const ShiftResult shift = lateral_shift(sc, ShiftMethod::Analytic);

        os << render_double(theta) << ',' << render_double(std::abs(r)) << ','
           << render_double(std::arg(r) + 0.0) << ',' << render_double(shift.phase) << ',';
        if (std::isfinite(shift.shift_adim)) {
            os << render_double(shift.shift_adim);
        } else {
            os << "inf";
        }
        os << ',' << regime_name(shift.regime) << '\n';
    }
    return exit_ok;
}

int cmd_verify(std::uint64_t seed, int count, double perturbation,
               const std::string& out_path) {
    const VerificationReport report = run_suite(seed, count, perturbation);
    OutputTarget target(out_path);
    target.stream() << to_json(report).dump(2) << "\n";
    return report.all_passed() ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar step-potential scattering amplitudes and lateral shifts"};
    app.require_subcommand(1);

    PotentialArgs point_pot, sweep_pot;
    double theta = 0.0, theta_min = 0.0, theta_max = 0.0;
    double point_p = 1.0, sweep_p = 1.0;
    int steps = 0;
    bool point_deg = false, sweep_deg = false;
    std::string point_out, sweep_out, verify_out;
    std::uint64_t seed = 1;
    int count = 100;
    double perturbation = 0.0;

    CLI::App* point = app.add_subcommand("point", "Evaluate one incidence angle");
    add_potential_flags(point, point_pot);
    point->add_option("--theta", theta, "Incidence angle (radians)")->required();
    point->add_flag("--deg", point_deg, "Interpret angles as degrees");
    point->add_option("--p", point_p, "Momentum magnitude (default 1)");
    point->add_option("--out", point_out, "Output path (default stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "CSV sweep over incidence angles");
    add_potential_flags(sweep, sweep_pot);
    sweep->add_option("--theta-min", theta_min, "Grid start (radians)")->required();
    sweep->add_option("--theta-max", theta_max, "Grid end (radians)")->required();
    sweep->add_option("--steps", steps, "Number of grid rows (>= 2)")->required();
    sweep->add_flag("--deg", sweep_deg, "Interpret angles as degrees");
    sweep->add_option("--p", sweep_p, "Momentum magnitude (default 1)");
    sweep->add_option("--out", sweep_out, "Output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--seed", seed, "Random seed (default 1)");
    verify->add_option("--count", count, "Scenarios per potential kind (default 100)");
    verify->add_option("--out", verify_out, "Output path (default stdout)");
    verify
        ->add_option("--inject-perturbation", perturbation,
                     "Testing hook: offset added to the solved reflection amplitude")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return exit_usage;
    }

    try {
        if (point->parsed()) {
            return cmd_point(point_pot, theta, point_deg, point_p, point_out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_pot, theta_min, theta_max, steps, sweep_deg,
                             sweep_p, sweep_out);
        }
        return cmd_verify(seed, count, perturbation, verify_out);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_unwritable;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    }
}
