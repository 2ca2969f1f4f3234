#pragma once

#include <utility>
#include <vector>

#include "qstep/media.hpp"

namespace qstep {

enum class ShiftMethod { Analytic, FiniteDifference };

/// Lateral-displacement result. shift_adim is the adimensional p*y/hbar.
/// In the Critical regime shift_adim is +infinity, never a silent large
/// number; phase still carries the (finite) reflection phase at that angle.
struct ShiftResult {
    Regime regime = Regime::BelowCritical;
    double phase = 0.0;
    double shift_adim = 0.0;
    ShiftMethod method = ShiftMethod::Analytic;
};

/// psi = arctan(sqrt(sin^2 t - n^2)/cos t), the total-reflection phase of the
/// complex step (r = exp(-2i psi)). RegimeError below the critical angle.
double phase_complex(const ScatterScenario& scenario);

/// Closed form 2 tan(t) / sqrt(sin^2 t - n^2). CriticalDivergence inside the
/// critical band, RegimeError below it.
ShiftResult shift_complex(const ScatterScenario& scenario);

/// Total-reflection phase of the pure-quaternionic step, defined through
/// R_> = exp(-2i Psi); that identity is the correctness contract.
double phase_quat_above(const ScatterScenario& scenario);

/// Below-critical phase pair (Phi_num, Phi_den) of the pure-quaternionic
/// reflection, arg R_< = Phi_num - Phi_den. RegimeError above critical.
std::pair<double, double> phases_quat_below(const ScatterScenario& scenario);

/// Stationary-phase lateral shift:
///   above critical   shift = (2/cos t) dPsi/dt
///   below critical   shift = -(1/cos t) d(arg R)/dt
///                    (identically zero for complex-kind potentials)
/// Analytic differentiates the closed-form arctan expressions; general-kind
/// potentials have no closed phase and accept FiniteDifference only.
/// Throws CriticalDivergence inside the critical band.
ShiftResult shift_stationary_phase(const ScatterScenario& scenario, ShiftMethod method);

/// Total variant of shift_stationary_phase: critical incidence comes back as
/// a flagged Regime::Critical result with shift_adim = +infinity.
ShiftResult lateral_shift(const ScatterScenario& scenario, ShiftMethod method);

/// Remove 2*pi jumps (threshold pi) so a grid of phases differentiates
/// cleanly; first element is kept as-is.
std::vector<double> unwrap_phases(std::vector<double> phases);

}  // namespace qstep
