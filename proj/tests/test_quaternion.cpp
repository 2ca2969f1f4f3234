#include <doctest.h>

#include <cmath>
#include <limits>

#include "qstep/quaternion.hpp"
#include "qstep/rng.hpp"

using namespace qstep;

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

Quaternion random_quat(SplitMix64& rng) {
    return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
            rng.uniform(-1.0, 1.0)};
}

}  // namespace

// ---------------------------------------------------------------------------
//  Hamilton product
// ---------------------------------------------------------------------------

TEST_CASE("basis products follow the Hamilton table") {
    CHECK(quat_i * quat_i == -quat_one);
    CHECK(quat_j * quat_j == -quat_one);
    CHECK(quat_k * quat_k == -quat_one);
    CHECK(quat_i * quat_j == quat_k);
    CHECK(quat_j * quat_k == quat_i);
    CHECK(quat_k * quat_i == quat_j);
    CHECK(quat_j * quat_i == -quat_k);
    CHECK(quat_i * quat_j * quat_k == -quat_one);
}

TEST_CASE("hand-expanded products match") {
    // (1 + j) * i = i + ji = i - k
    const Quaternion q = (quat_one + quat_j) * quat_i;
    CHECK(q == Quaternion{0.0, 1.0, 0.0, -1.0});

    // q * conj(q) for q = 1 + i + j + k is the squared norm, 4
    const Quaternion u{1.0, 1.0, 1.0, 1.0};
    const Quaternion n = u * u.conj();
    CHECK(n.w == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(n.x == 0.0);
    CHECK(n.y == 0.0);
    CHECK(n.z == 0.0);
}

TEST_CASE("quat_mul is bilinear with identity") {
    SplitMix64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const Quaternion a = random_quat(rng);
        const Quaternion b = random_quat(rng);
        const Quaternion c = random_quat(rng);
        CHECK((quat_mul(a, quat_one) - a).norm() == 0.0);
        CHECK((quat_mul(a + b, c) - (a * c + b * c)).norm() < 1e-12);
        CHECK((quat_mul(a, b + c) - (a * b + a * c)).norm() < 1e-12);
        // associativity
        CHECK(((a * b) * c - a * (b * c)).norm() < 1e-12);
    }
}

TEST_CASE("left and right multiplication by i differ off the complex subalgebra") {
    CHECK(left_multiply_by_i(quat_j) == quat_k);
    CHECK(right_multiply_by_i(quat_j) == -quat_k);
    CHECK(left_multiply_by_i(quat_one) == quat_i);
    CHECK(right_multiply_by_i(quat_one) == quat_i);

    SplitMix64 rng(12);
    for (int i = 0; i < 100; ++i) {
        const cplx beta{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        const Quaternion psi = quat_j * embed(beta);
        // j has nonzero j/k parts: the two orientations must disagree
        CHECK((left_multiply_by_i(psi) + right_multiply_by_i(psi)).norm() <
              4 * eps * psi.norm());
        CHECK((left_multiply_by_i(psi) - right_multiply_by_i(psi)).norm() >
              psi.norm());
    }
}

// ---------------------------------------------------------------------------
//  Algebra invariants
// ---------------------------------------------------------------------------

TEST_CASE("generic pairs do not commute") {
    SplitMix64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Quaternion a = random_quat(rng);
        const Quaternion b = random_quat(rng);
        CHECK((a * b - b * a).norm() > 0.0);
    }
    // ... unless both live in a common complex subalgebra
    const Quaternion a = embed(cplx{0.3, -0.8});
    const Quaternion b = embed(cplx{-1.1, 0.25});
    CHECK((a * b - b * a).norm() == 0.0);
}

TEST_CASE("norm is multiplicative to 8 ulp") {
    SplitMix64 rng(14);
    for (int i = 0; i < 1000; ++i) {
        const Quaternion a = random_quat(rng);
        const Quaternion b = random_quat(rng);
        const double lhs = (a * b).norm();
        const double rhs = a.norm() * b.norm();
        CHECK(std::abs(lhs - rhs) <= 8 * eps * rhs);
    }
}

TEST_CASE("conj(q) * q is norm^2 times the identity to 4 ulp") {
    SplitMix64 rng(15);
    for (int i = 0; i < 1000; ++i) {
        const Quaternion q = random_quat(rng);
        const Quaternion p = q.conj() * q;
        const double n2 = q.norm_sq();
        CHECK(std::abs(p.w - n2) <= 4 * eps * n2);
        CHECK(std::abs(p.x) <= 4 * eps * n2);
        CHECK(std::abs(p.y) <= 4 * eps * n2);
        CHECK(std::abs(p.z) <= 4 * eps * n2);
    }
}

TEST_CASE("j-switch identity: j c = conj(c) j for complex c") {
    SplitMix64 rng(16);
    for (int i = 0; i < 1000; ++i) {
        const cplx c{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const Quaternion lhs = quat_j * embed(c);
        const Quaternion rhs = embed(std::conj(c)) * quat_j;
        CHECK((lhs - rhs).norm() <= 4 * eps * lhs.norm());
    }
}

// ---------------------------------------------------------------------------
//  Complex embedding and the split q = c1 + j c2
// ---------------------------------------------------------------------------

TEST_CASE("embedding commutes with complex products") {
    SplitMix64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const cplx c1{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const cplx c2{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const Quaternion lhs = embed(c1) * embed(c2);
        const Quaternion rhs = embed(c1 * c2);
        CHECK((lhs - rhs).norm() < 1e-12);
    }
}

TEST_CASE("split round-trips: q = c1 + j c2") {
    SplitMix64 rng(18);
    for (int i = 0; i < 200; ++i) {
        const Quaternion q = random_quat(rng);
        const cplx c1 = complex_part(q);
        const cplx c2 = jcomplex_part(q);
        CHECK(from_split(c1, c2) == q);
        const Quaternion rebuilt = embed(c1) + quat_j * embed(c2);
        CHECK((rebuilt - q).norm() == 0.0);
    }
}
