#pragma once

#include <utility>

#include "qstep/media.hpp"
#include "qstep/quaternion.hpp"

namespace qstep {

/// The four matching amplitudes at the step, plus the channel mixers.
///   r   propagating reflection          rt  evanescent reflected j-channel
///   t   propagating transmission        tt  evanescent transmitted channel
/// For complex-kind potentials alpha = beta = 0 and rt = tt = 0 exactly.
struct AmplitudeSet {
    cplx r{0.0, 0.0};
    cplx rt{0.0, 0.0};
    cplx t{0.0, 0.0};
    cplx tt{0.0, 0.0};
    cplx alpha{0.0, 0.0};
    cplx beta{0.0, 0.0};
};

/// Channel mixers of the transmitted wave,
///   alpha =  i (v2 + i v3) / (1 + N^2)
///   beta  = -i (v2 - i v3) / (1 + N^2).
std::pair<cplx, cplx> mixing_coefficients(const PotentialSpec& potential);

/// Independent amplitude oracle: assembles the four continuity equations
///   1 + r  = t + alpha*tt
///   1 - r  = (q_z/p_z) t + i (qt/p_z) alpha*tt
///   rt     = beta*t + tt
///   p_z rt = i beta*t q_z - tt*qt
/// and solves them as a 4x4 complex linear system by partial-pivot Gaussian
/// elimination written here, never through the closed forms below.
/// Throws SingularMatching when the system degenerates.
AmplitudeSet solve_matching(const ScatterScenario& scenario);

/// (cos t - sqrt(n^2 - sin^2 t)) / (cos t + sqrt(n^2 - sin^2 t)), with the
/// square root continued to +i sqrt(sin^2 t - n^2) above the critical angle
/// so that |r| = 1 and r = exp(-2i psi) there. Complex-kind only.
cplx reflection_complex(const ScatterScenario& scenario);

/// t = 2 p_z / (p_z + q_z), same branch as reflection_complex.
cplx transmission_complex(const ScatterScenario& scenario);

/// Closed-form reflection for any potential kind:
///   r = [(p_z - q_z)(qt + p_z) + ab (i q_z - p_z)(p_z - i qt)]
///       / [(p_z + q_z)(qt + p_z) + ab (i q_z - p_z)(p_z + i qt)]
/// with ab = alpha*beta. Throws DegenerateDenominator when the denominator
/// magnitude drops below 1e-14.
cplx reflection_quat_general(const ScatterScenario& scenario);

/// Pure-quaternionic closed form with alpha*beta eliminated through
/// (1 - n^2)/(1 + n^2); above critical evaluates the explicit totally
/// reflecting branch with q_z = i|q_z|.
cplx reflection_quat_pure(const ScatterScenario& scenario);

}  // namespace qstep
