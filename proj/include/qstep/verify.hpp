#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qstep/media.hpp"
#include "qstep/quaternion.hpp"
#include "qstep/scatter.hpp"

namespace qstep {

enum class Region { I, II };

struct CheckRecord {
    std::string name;
    std::string scenario;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;

    bool operator==(const CheckRecord&) const = default;
};

/// Machine-readable ledger of one verification run.
struct VerificationReport {
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;

    bool operator==(const VerificationReport&) const = default;
    bool all_passed() const;
};

/// Max quaternion-norm mismatch of the wavefunction and its z-derivative at
/// the step, reconstructed from the amplitudes across 8 sample y values.
double verify_continuity(const AmplitudeSet& amplitudes, const ScatterScenario& scenario);

/// Residual of one plane-wave element u * exp[(i k_y y + w z)/hbar] against
/// the quaternionic wave equation E psi i = [-i (hbar^2/2m) lap + hV] psi,
/// maxed over 16 deterministic sample points on the region's side (E = p^2
/// in the hbar = 1, m = 1/2 normalization). Derivatives are analytic.
double schrodinger_element_residual(const PotentialSpec& potential, double p,
                                    const Quaternion& u, double k_y, cplx w,
                                    Region region);

/// Max schrodinger_element_residual over the region's wave basis. The
/// channel mixers are derived here independently of the scatter module so
/// the elements are exact solutions of the wave equation.
double verify_schrodinger(const ScatterScenario& scenario, Region region);

/// Runs every verification on count random scenarios per potential kind.
/// Identical (seed, count) pairs produce identical reports. Throws
/// DomainError when count < 1.
VerificationReport run_suite(std::uint64_t seed, int count);

/// Same, with an additive perturbation applied to the solved reflection
/// amplitude before the continuity check. A failure-injection hook for
/// exercising the verify exit path; zero perturbation is the normal suite.
VerificationReport run_suite(std::uint64_t seed, int count, double perturbation);

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace qstep
