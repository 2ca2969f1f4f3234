#include "qstep/ghshift.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "qstep/errors.hpp"
#include "qstep/scatter.hpp"

namespace qstep {

namespace {

// Momentum ratios (everything divided by p) and their theta-derivatives.
// All phase formulas depend only on these, so shifts are p-independent.
struct Ratios {
    double s, c;       // sin, cos
    double cp;         // d cos / d theta = -s
    double n2;         // N^2
    double a, b;       // 1 +- n^2
    double qt, qtp;    // sqrt(n^2 + sin^2), derivative
};

Ratios ratios(const ScatterScenario& scenario) {
    Ratios r;
    const double index = refractive_index_quat(scenario.potential);
    r.s = std::sin(scenario.theta);
    r.c = std::cos(scenario.theta);
    r.cp = -r.s;
    r.n2 = index * index;
    r.a = 1.0 + r.n2;
    r.b = 1.0 - r.n2;
    r.qt = std::sqrt(r.n2 + r.s * r.s);
    r.qtp = r.s * r.c / r.qt;
    return r;
}

// Psi and dPsi/dtheta for total reflection off the pure-quaternionic step,
//   tan Psi = [a q (c + qt) - b qt (c + q)] / [c (a (c + qt) - b (c + q))]
// with q = sqrt(sin^2 - n^2). Finite at q = 0, so usable on the critical
// boundary itself.
struct PhaseAbove {
    double value;
    double derivative;
};

PhaseAbove phase_above_quat(const Ratios& r) {
    const double q = std::sqrt(std::max(0.0, r.s * r.s - r.n2));
    const double num = r.a * q * (r.c + r.qt) - r.b * r.qt * (r.c + q);
    const double g = r.a * (r.c + r.qt) - r.b * (r.c + q);
    const double den = r.c * g;

    const double qp = q > 0.0 ? r.s * r.c / q : std::numeric_limits<double>::infinity();
    const double nump = r.a * (qp * (r.c + r.qt) + q * (r.cp + r.qtp))
                        - r.b * (r.qtp * (r.c + q) + r.qt * (r.cp + qp));
    const double gp = r.a * (r.cp + r.qtp) - r.b * (r.cp + qp);
    const double denp = r.cp * g + r.c * gp;

    return {std::atan2(num, den),
            (nump * den - num * denp) / (num * num + den * den)};
}

// Phi_num / Phi_den and derivatives for incidence below the critical angle,
// pure-quaternionic step. Q = sqrt(n^2 - sin^2) is the real transmitted
// momentum ratio.
struct PhasePair {
    double num, den;
    double num_deriv, den_deriv;
};

PhasePair phases_below_quat(const Ratios& r) {
    const double Q = std::sqrt(std::max(0.0, r.n2 - r.s * r.s));
    const double Qp = Q > 0.0 ? -r.s * r.c / Q : -std::numeric_limits<double>::infinity();

    const double fn = r.b * (Q + r.qt) * r.c;
    const double gn = r.a * (r.c - Q) * (r.qt + r.c) - r.b * (r.c * r.c - Q * r.qt);
    const double fnp = r.b * ((Qp + r.qtp) * r.c + (Q + r.qt) * r.cp);
    const double gnp = r.a * ((r.cp - Qp) * (r.qt + r.c) + (r.c - Q) * (r.qtp + r.cp))
                       - r.b * (2.0 * r.c * r.cp - Qp * r.qt - Q * r.qtp);

    const double fd = r.b * (Q - r.qt) * r.c;
    const double gd = r.a * (r.c + Q) * (r.qt + r.c) - r.b * (r.c * r.c + Q * r.qt);
    const double fdp = r.b * ((Qp - r.qtp) * r.c + (Q - r.qt) * r.cp);
    const double gdp = r.a * ((r.cp + Qp) * (r.qt + r.c) + (r.c + Q) * (r.qtp + r.cp))
                       - r.b * (2.0 * r.c * r.cp + Qp * r.qt + Q * r.qtp);

    PhasePair out;
    out.num = std::atan2(fn, gn);
    out.den = std::atan2(fd, gd);
    out.num_deriv = (fnp * gn - fn * gnp) / (fn * fn + gn * gn);
    out.den_deriv = (fdp * gd - fd * gdp) / (fd * fd + gd * gd);
    return out;
}

double wrap_to_pi(double delta) {
    while (delta > M_PI) delta -= 2.0 * M_PI;
    while (delta < -M_PI) delta += 2.0 * M_PI;
    return delta;
}

// Central difference of a phase function with the step rule
// h = max(1e-6, 1e-6*theta), one Richardson refinement when the full- and
// half-step estimates disagree by more than 1e-6 relative. Phase jumps
// across the stencil are unwrapped; the functions are even in theta, which
// covers stencils that poke past theta = 0.
double phase_derivative_fd(const std::function<double(double)>& phase,
                           double theta, double boundary_gap) {
    double h = std::max(1e-6, 1e-6 * theta);
    h = std::min(h, (M_PI_2 - theta) / 4.0);
    if (boundary_gap > 0.0) h = std::min(h, boundary_gap / 2.0);

    const auto central = [&](double step) {
        const double hi = phase(theta + step);
        const double lo = phase(std::abs(theta - step));
        return wrap_to_pi(hi - lo) / (2.0 * step);
    };
    const double full = central(h);
    const double half = central(h / 2.0);
    if (std::abs(full - half) > 1e-6 * std::abs(half)) {
        return (4.0 * half - full) / 3.0;
    }
    return half;
}

ScatterScenario at_angle(const ScatterScenario& base, double theta) {
    return ScatterScenario(theta, base.p, base.potential);
}

void require_kind(const ScatterScenario& scenario, PotentialKind kind, const char* op) {
    if (scenario.potential.kind != kind) {
        throw DomainError(std::string(op) + ": wrong potential kind");
    }
}

}  // namespace

double phase_complex(const ScatterScenario& scenario) {
    require_kind(scenario, PotentialKind::Complex, "phase_complex");
    const double n = refractive_index_complex(scenario.potential);
    const double s = std::sin(scenario.theta);
    if (s <= n) throw RegimeError("phase_complex: needs incidence above critical");
    return std::atan(std::sqrt(s * s - n * n) / std::cos(scenario.theta));
}

ShiftResult shift_complex(const ScatterScenario& scenario) {
    require_kind(scenario, PotentialKind::Complex, "shift_complex");
    const double n = refractive_index_complex(scenario.potential);
    const double s = std::sin(scenario.theta);
    if (std::abs(s - n) < critical_epsilon) {
        throw CriticalDivergence("shift_complex: diverges at critical incidence");
    }
    if (s < n) throw RegimeError("shift_complex: needs incidence above critical");
    const double root = std::sqrt(s * s - n * n);
    return {Regime::AboveCritical,
            std::atan(root / std::cos(scenario.theta)),
            2.0 * std::tan(scenario.theta) / root,
            ShiftMethod::Analytic};
}

double phase_quat_above(const ScatterScenario& scenario) {
    require_kind(scenario, PotentialKind::PureQuaternionic, "phase_quat_above");
    if (classify_regime(scenario) != Regime::AboveCritical) {
        throw RegimeError("phase_quat_above: needs incidence above critical");
    }
    return phase_above_quat(ratios(scenario)).value;
}

std::pair<double, double> phases_quat_below(const ScatterScenario& scenario) {
    require_kind(scenario, PotentialKind::PureQuaternionic, "phases_quat_below");
    if (classify_regime(scenario) != Regime::BelowCritical) {
        throw RegimeError("phases_quat_below: needs incidence below critical");
    }
    const PhasePair p = phases_below_quat(ratios(scenario));
    return {p.num, p.den};
}

ShiftResult shift_stationary_phase(const ScatterScenario& scenario, ShiftMethod method) {
    const Regime regime = classify_regime(scenario);
    if (regime == Regime::Critical) {
        throw CriticalDivergence("shift_stationary_phase: diverges at critical incidence");
    }
    const double cos_t = std::cos(scenario.theta);
    const double theta_c = critical_angle(refractive_index_quat(scenario.potential));
    const double gap = std::abs(scenario.theta - theta_c);
    const PotentialKind kind = scenario.potential.kind;

    if (kind == PotentialKind::Complex) {
        if (regime == Regime::BelowCritical) {
            // Real reflection coefficient: constant zero phase, zero shift.
            return {regime, 0.0, 0.0, method};
        }
        if (method == ShiftMethod::Analytic) return shift_complex(scenario);
        const double deriv = phase_derivative_fd(
            [&](double th) { return phase_complex(at_angle(scenario, th)); },
            scenario.theta, gap);
        return {regime, phase_complex(scenario), 2.0 * deriv / cos_t, method};
    }

    if (kind == PotentialKind::PureQuaternionic) {
        const Ratios r = ratios(scenario);
        if (regime == Regime::AboveCritical) {
            const PhaseAbove pa = phase_above_quat(r);
            double deriv = pa.derivative;
            if (method == ShiftMethod::FiniteDifference) {
                deriv = phase_derivative_fd(
                    [&](double th) { return phase_above_quat(ratios(at_angle(scenario, th))).value; },
                    scenario.theta, gap);
            }
            return {regime, pa.value, 2.0 * deriv / cos_t, method};
        }
        // the + 0.0 below maps the signed zero at normal incidence to plain 0
        const PhasePair pp = phases_below_quat(r);
        double arg_deriv = pp.num_deriv - pp.den_deriv;
        if (method == ShiftMethod::FiniteDifference) {
            arg_deriv = phase_derivative_fd(
                [&](double th) {
                    const PhasePair q = phases_below_quat(ratios(at_angle(scenario, th)));
                    return q.num - q.den;
                },
                scenario.theta, gap);
        }
        return {regime, pp.num - pp.den, -arg_deriv / cos_t + 0.0, method};
    }

    // General kind: no closed phase in any regime, differentiate arg R.
    if (method == ShiftMethod::Analytic) {
        throw DomainError(
            "shift_stationary_phase: general-kind potentials support FiniteDifference only");
    }
    const double arg_r = std::arg(reflection_quat_general(scenario));
    const double deriv = phase_derivative_fd(
        [&](double th) { return std::arg(reflection_quat_general(at_angle(scenario, th))); },
        scenario.theta, gap);
    const double phase = regime == Regime::AboveCritical ? -0.5 * arg_r : arg_r;
    return {regime, phase, -deriv / cos_t + 0.0, method};
}

ShiftResult lateral_shift(const ScatterScenario& scenario, ShiftMethod method) {
    if (classify_regime(scenario) != Regime::Critical) {
        return shift_stationary_phase(scenario, method);
    }
    double phase = 0.0;
    if (scenario.potential.kind == PotentialKind::PureQuaternionic) {
        phase = phase_above_quat(ratios(scenario)).value;
    } else if (scenario.potential.kind == PotentialKind::General) {
        phase = -0.5 * std::arg(reflection_quat_general(scenario));
    }
    return {Regime::Critical, phase, std::numeric_limits<double>::infinity(), method};
}

std::vector<double> unwrap_phases(std::vector<double> phases) {
    double offset = 0.0;
    for (std::size_t i = 1; i < phases.size(); ++i) {
        const double raw = phases[i] + offset;
        const double jump = raw - phases[i - 1];
        if (jump > M_PI) {
            offset -= 2.0 * M_PI * std::ceil((jump - M_PI) / (2.0 * M_PI));
        } else if (jump < -M_PI) {
            offset += 2.0 * M_PI * std::ceil((-jump - M_PI) / (2.0 * M_PI));
        }
        phases[i] += offset;
    }
    return phases;
}

}  // namespace qstep
