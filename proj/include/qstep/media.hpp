#pragma once

#include <optional>

#include "qstep/quaternion.hpp"

namespace qstep {

/// Everything is normalized to the incidence energy: E = 1, hbar = 1,
/// m = 1/2, so p^2 = 2mE = 1 by default while p stays a free scale.
/// Potential components are the dimensionless ratios V_k / E.

enum class PotentialKind { Complex, PureQuaternionic, General };

/// Step potential i*V1 + j*V2 + k*V3 switched on for z > 0, in units of E.
/// The kind is classified from the exact zero pattern of the inputs
/// (they are user-provided ratios, not computed quantities).
struct PotentialSpec {
    double v1 = 0.0;
    double v2 = 0.0;
    double v3 = 0.0;
    PotentialKind kind = PotentialKind::Complex;

    /// Throws DomainError when v2^2 + v3^2 >= 1 (the inner square root of
    /// the quaternionic index would leave the reals).
    PotentialSpec(double v1_, double v2_, double v3_);

    static PotentialSpec complex_step(double v1);
    /// Pure quaternionic potential from modulus and phase of V2 + i*V3.
    static PotentialSpec pure_quaternionic(double vmod, double vphase);

    /// Modulus-squared v2^2 + v3^2.
    double transverse_sq() const { return v2 * v2 + v3 * v3; }
};

/// Incidence setup: angle theta in [0, pi/2), momentum magnitude p > 0.
struct ScatterScenario {
    double theta;
    double p;
    PotentialSpec potential;

    ScatterScenario(double theta_, double p_, PotentialSpec potential_);
};

/// Momentum components on both sides of the step.
///   q_z       propagating transmitted momentum, complex: real below the
///             critical angle, +i|q_z| above it
///   qt_abs    |Q~_z|, magnitude of the always-evanescent channel momentum
struct Kinematics {
    double p_y = 0.0;
    double p_z = 0.0;
    cplx q_z{0.0, 0.0};
    double qt_abs = 0.0;
};

/// |sin(theta) - N| below this counts as critical incidence; it sits below
/// the double-precision noise floor of the square roots involved.
inline constexpr double critical_epsilon = 1e-9;

enum class Regime { BelowCritical, Critical, AboveCritical };

/// n = sqrt(1 - v1). Requires a Complex-kind potential with v1 < 1.
double refractive_index_complex(const PotentialSpec& potential);

/// N = sqrt(sqrt(1 - v2^2 - v3^2) - v1), defined for every kind.
double refractive_index_quat(const PotentialSpec& potential);

/// arcsin(index) for index in (0, 1]; above 1 there is no total reflection.
double critical_angle(double index);

/// Snell law sin(theta) = index * sin(phi). Empty above the critical angle.
std::optional<double> snell_refraction_angle(double theta, double index);

Regime classify_regime(const ScatterScenario& scenario);

/// Momentum components for the scenario:
///   p_y = p sin(theta), p_z = p cos(theta),
///   q_z = p sqrt(N^2 - sin^2 theta) below critical, +i p sqrt(sin^2 - N^2)
///         above, clamped to exactly 0 within critical_epsilon,
///   qt_abs = p sqrt(Nt^2 + sin^2 theta) with Nt^2 = sqrt(1-v2^2-v3^2) + v1.
Kinematics kinematics(const ScatterScenario& scenario);

}  // namespace qstep
