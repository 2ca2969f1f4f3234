#include "qstep/media.hpp"

#include <cmath>

#include "qstep/errors.hpp"

namespace qstep {

namespace {

PotentialKind classify(double v1, double v2, double v3) {
    if (v2 == 0.0 && v3 == 0.0) return PotentialKind::Complex;
    if (v1 == 0.0) return PotentialKind::PureQuaternionic;
    return PotentialKind::General;
}

}  // namespace

PotentialSpec::PotentialSpec(double v1_, double v2_, double v3_)
    : v1(v1_), v2(v2_), v3(v3_), kind(classify(v1_, v2_, v3_)) {
    if (v2 * v2 + v3 * v3 >= 1.0) {
        throw DomainError("potential: v2^2 + v3^2 must stay below 1");
    }
}

PotentialSpec PotentialSpec::complex_step(double v1) {
    return PotentialSpec(v1, 0.0, 0.0);
}

PotentialSpec PotentialSpec::pure_quaternionic(double vmod, double vphase) {
    return PotentialSpec(0.0, vmod * std::cos(vphase), vmod * std::sin(vphase));
}

ScatterScenario::ScatterScenario(double theta_, double p_, PotentialSpec potential_)
    : theta(theta_), p(p_), potential(potential_) {
    if (!(theta >= 0.0) || !(theta < M_PI_2)) {
        throw DomainError("scenario: theta must lie in [0, pi/2)");
    }
    if (!(p > 0.0)) {
        throw DomainError("scenario: momentum p must be positive");
    }
}

double refractive_index_complex(const PotentialSpec& potential) {
    if (potential.kind != PotentialKind::Complex) {
        throw DomainError("refractive_index_complex: potential is not complex-kind");
    }
    if (potential.v1 >= 1.0) {
        throw DomainError("refractive_index_complex: v1 >= 1 leaves no propagating channel");
    }
    return std::sqrt(1.0 - potential.v1);
}

double refractive_index_quat(const PotentialSpec& potential) {
    const double radicand = std::sqrt(1.0 - potential.transverse_sq()) - potential.v1;
    if (radicand <= 0.0) {
        throw DomainError("refractive_index_quat: index radicand is not positive");
    }
    return std::sqrt(radicand);
}

double critical_angle(double index) {
    if (!(index > 0.0)) throw DomainError("critical_angle: index must be positive");
    if (index > 1.0) throw DomainError("critical_angle: index > 1 has no total reflection");
    return std::asin(index);
}

std::optional<double> snell_refraction_angle(double theta, double index) {
    if (!(theta >= 0.0) || !(theta < M_PI_2)) {
        throw DomainError("snell_refraction_angle: theta must lie in [0, pi/2)");
    }
    if (!(index > 0.0)) throw DomainError("snell_refraction_angle: index must be positive");
    const double s = std::sin(theta) / index;
    if (s > 1.0) return std::nullopt;
    return std::asin(s);
}

Regime classify_regime(const ScatterScenario& scenario) {
    const double index = refractive_index_quat(scenario.potential);
    const double gap = std::sin(scenario.theta) - index;
    if (std::abs(gap) < critical_epsilon) return Regime::Critical;
    return gap < 0.0 ? Regime::BelowCritical : Regime::AboveCritical;
}

Kinematics kinematics(const ScatterScenario& scenario) {
    const double index = refractive_index_quat(scenario.potential);
    const double sin_t = std::sin(scenario.theta);
    const double p = scenario.p;

    Kinematics k;
    k.p_y = p * sin_t;
    k.p_z = p * std::cos(scenario.theta);

    // Branch fixed once: q_z >= 0 below critical, +i|q_z| above, and exactly
    // zero inside the critical band so downstream formulas see a clean limit.
    if (std::abs(sin_t - index) < critical_epsilon) {
        k.q_z = cplx(0.0, 0.0);
    } else if (sin_t < index) {
        k.q_z = cplx(p * std::sqrt(index * index - sin_t * sin_t), 0.0);
    } else {
        k.q_z = cplx(0.0, p * std::sqrt(sin_t * sin_t - index * index));
    }

    const double nt_sq = std::sqrt(1.0 - scenario.potential.transverse_sq())
                         + scenario.potential.v1;
    const double qt_radicand = nt_sq + sin_t * sin_t;
    if (qt_radicand < 0.0) {
        throw DomainError("kinematics: evanescent channel radicand is negative");
    }
    k.qt_abs = p * std::sqrt(qt_radicand);
    return k;
}

}  // namespace qstep
