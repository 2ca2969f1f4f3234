#include "qstep/scatter.hpp"

#include <array>
#include <cmath>

#include "qstep/errors.hpp"

namespace qstep {

namespace {

constexpr cplx imag_unit{0.0, 1.0};

/// Gaussian elimination with partial pivoting on a 4x4 complex system.
/// Kept in-module on purpose: this backs the independence oracle.
std::array<cplx, 4> solve4(std::array<std::array<cplx, 4>, 4> m,
                           std::array<cplx, 4> rhs) {
    constexpr int n = 4;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(m[col][col]);
        for (int row = col + 1; row < n; ++row) {
            const double mag = std::abs(m[row][col]);
            if (mag > best) {
                best = mag;
                pivot = row;
            }
        }
        if (best < 1e-14) {
            throw SingularMatching("matching system is singular at this scenario");
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            std::swap(rhs[pivot], rhs[col]);
        }
        for (int row = col + 1; row < n; ++row) {
            const cplx factor = m[row][col] / m[col][col];
            if (factor == cplx{0.0, 0.0}) continue;
            for (int j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
            rhs[row] -= factor * rhs[col];
        }
    }
    std::array<cplx, 4> x{};
    for (int row = n - 1; row >= 0; --row) {
        cplx acc = rhs[row];
        for (int j = row + 1; j < n; ++j) acc -= m[row][j] * x[j];
        x[row] = acc / m[row][row];
    }
    return x;
}

}  // namespace

std::pair<cplx, cplx> mixing_coefficients(const PotentialSpec& potential) {
    const double index = refractive_index_quat(potential);
    const double denom = 1.0 + index * index;
    const cplx alpha = imag_unit * cplx(potential.v2, potential.v3) / denom;
    const cplx beta = -imag_unit * cplx(potential.v2, -potential.v3) / denom;
    return {alpha, beta};
}

AmplitudeSet solve_matching(const ScatterScenario& scenario) {
    const Kinematics k = kinematics(scenario);
    const auto [alpha, beta] = mixing_coefficients(scenario.potential);
    const double pz = k.p_z;
    const double qt = k.qt_abs;

    // Unknown order (r, rt, t, tt).
    std::array<std::array<cplx, 4>, 4> m{{
        {cplx(1.0), cplx(0.0), cplx(-1.0), -alpha},
        {cplx(-pz), cplx(0.0), -k.q_z, -imag_unit * qt * alpha},
        {cplx(0.0), cplx(1.0), -beta, cplx(-1.0)},
        {cplx(0.0), cplx(pz), -imag_unit * beta * k.q_z, cplx(qt)},
    }};
    std::array<cplx, 4> rhs{cplx(-1.0), cplx(-pz), cplx(0.0), cplx(0.0)};

    const auto x = solve4(m, rhs);
    AmplitudeSet out;
    out.r = x[0];
    out.rt = x[1];
    out.t = x[2];
    out.tt = x[3];
    out.alpha = alpha;
    out.beta = beta;
    return out;
}

namespace {

/// q_z / p with the shared branch convention: real below critical,
/// +i sqrt(sin^2 - n^2) above, exactly zero inside the critical band.
cplx transmitted_momentum_ratio(double sin_t, double n) {
    if (std::abs(sin_t - n) < critical_epsilon) return {0.0, 0.0};
    const double s2 = n * n - sin_t * sin_t;
    return s2 > 0.0 ? cplx(std::sqrt(s2), 0.0) : cplx(0.0, std::sqrt(-s2));
}

}  // namespace

cplx reflection_complex(const ScatterScenario& scenario) {
    const double n = refractive_index_complex(scenario.potential);
    const double cos_t = std::cos(scenario.theta);
    const cplx qz = transmitted_momentum_ratio(std::sin(scenario.theta), n);
    return (cos_t - qz) / (cos_t + qz);
}

cplx transmission_complex(const ScatterScenario& scenario) {
    const double n = refractive_index_complex(scenario.potential);
    const double cos_t = std::cos(scenario.theta);
    const cplx qz = transmitted_momentum_ratio(std::sin(scenario.theta), n);
    return 2.0 * cos_t / (cos_t + qz);
}

cplx reflection_quat_general(const ScatterScenario& scenario) {
    const Kinematics k = kinematics(scenario);
    const auto [alpha, beta] = mixing_coefficients(scenario.potential);
    const cplx ab = alpha * beta;
    const double pz = k.p_z;
    const double qt = k.qt_abs;

    const cplx cross = ab * (imag_unit * k.q_z - pz);
    const cplx num = (pz - k.q_z) * (qt + pz) + cross * (pz - imag_unit * qt);
    const cplx den = (pz + k.q_z) * (qt + pz) + cross * (pz + imag_unit * qt);
    if (std::abs(den) < 1e-14) {
        throw DegenerateDenominator("reflection_quat_general: denominator vanished");
    }
    return num / den;
}

cplx reflection_quat_pure(const ScatterScenario& scenario) {
    if (scenario.potential.kind != PotentialKind::PureQuaternionic) {
        throw DomainError("reflection_quat_pure: potential is not pure quaternionic");
    }
    const Kinematics k = kinematics(scenario);
    const double n2 = std::sqrt(1.0 - scenario.potential.transverse_sq());
    const double a = 1.0 + n2;
    const double b = 1.0 - n2;
    const double pz = k.p_z;
    const double qt = k.qt_abs;

    cplx num, den;
    if (k.q_z.imag() == 0.0) {
        const double qz = k.q_z.real();
        num = a * (pz - qz) * (qt + pz)
              + b * (imag_unit * qz - pz) * (pz - imag_unit * qt);
        den = a * (pz + qz) * (qt + pz)
              + b * (imag_unit * qz - pz) * (pz + imag_unit * qt);
    } else {
        // Total reflection branch, q_z = i|q_z|.
        const double qz = k.q_z.imag();
        num = a * cplx(pz, -qz) * (qt + pz) - b * (pz + qz) * cplx(pz, -qt);
        den = a * cplx(pz, qz) * (qt + pz) - b * (pz + qz) * cplx(pz, qt);
    }
    if (std::abs(den) < 1e-14) {
        throw DegenerateDenominator("reflection_quat_pure: denominator vanished");
    }
    return num / den;
}

}  // namespace qstep
