#pragma once

#include <cmath>
#include <complex>

namespace qstep {

using cplx = std::complex<double>;

/// Real quaternion q = w + i*x + j*y + k*z with the Hamilton product
/// (i^2 = j^2 = k^2 = ijk = -1).
///
/// Complex numbers are kept in std::complex<double>; the embedding
/// c -> w + i*x and the split q = c1 + j*c2 (both c1, c2 complex) are
/// provided below. All operations are pure functions over immutable
/// values and safe to call concurrently.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quaternion operator*(double s) const {
        return {w * s, x * s, y * s, z * s};
    }

    // Hamilton product.
    constexpr Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

inline constexpr Quaternion quat_one{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion quat_i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion quat_j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion quat_k{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
    return a * b;
}

/// i * psi (potential side of the wave equation acts from the left).
constexpr Quaternion left_multiply_by_i(const Quaternion& psi) {
    return quat_i * psi;
}

/// psi * i (energy side of the wave equation acts from the right).
/// Differs from left_multiply_by_i whenever psi has a j or k part.
constexpr Quaternion right_multiply_by_i(const Quaternion& psi) {
    return psi * quat_i;
}

/// Embed a complex number into the i-generated subalgebra: c -> Re c + i*Im c.
inline Quaternion embed(const cplx& c) { return {c.real(), c.imag(), 0.0, 0.0}; }

/// Assemble q = c1 + j*c2. Note j*(a+bi) = a*j + b*(ji) = a*j - b*k, so the
/// component map is (w, x, y, z) = (Re c1, Im c1, Re c2, -Im c2).
inline Quaternion from_split(const cplx& c1, const cplx& c2) {
    return {c1.real(), c1.imag(), c2.real(), -c2.imag()};
}

/// First factor of the split q = c1 + j*c2.
inline cplx complex_part(const Quaternion& q) { return {q.w, q.x}; }

/// Second factor of the split q = c1 + j*c2.
inline cplx jcomplex_part(const Quaternion& q) { return {q.y, -q.z}; }

}  // namespace qstep
