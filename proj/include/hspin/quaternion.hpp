#pragma once

#include <cmath>

#include "hspin/base.hpp"

namespace hspin {

// Quaternion a + b i + c j + d k over doubles. Multiplication follows
// i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
struct Quaternion {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a_, double b_ = 0.0, double c_ = 0.0, double d_ = 0.0)
        : a(a_), b(b_), c(c_), d(d_) {}

    constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }
    constexpr Quaternion operator+(const Quaternion& q) const {
        return {a + q.a, b + q.b, c + q.c, d + q.d};
    }
    constexpr Quaternion operator-(const Quaternion& q) const {
        return {a - q.a, b - q.b, c - q.c, d - q.d};
    }
    constexpr Quaternion operator*(const Quaternion& q) const {
        return {a * q.a - b * q.b - c * q.c - d * q.d,
                a * q.b + b * q.a + c * q.d - d * q.c,
                a * q.c - b * q.d + c * q.a + d * q.b,
                a * q.d + b * q.c - c * q.b + d * q.a};
    }
    constexpr Quaternion operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    constexpr Quaternion operator/(double s) const { return {a / s, b / s, c / s, d / s}; }
    constexpr bool operator==(const Quaternion& q) const {
        return a == q.a && b == q.b && c == q.c && d == q.d;
    }

    constexpr double norm2() const { return a * a + b * b + c * c + d * d; }
    double norm() const { return std::sqrt(norm2()); }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

inline constexpr Quaternion q_one{1, 0, 0, 0};
inline constexpr Quaternion q_i{0, 1, 0, 0};
inline constexpr Quaternion q_j{0, 0, 1, 0};
inline constexpr Quaternion q_k{0, 0, 0, 1};

// The three conjugations. prime negates i, j (an algebra homomorphism);
// bar negates i, j, k; star negates only k (bar and star are
// anti-homomorphisms). They satisfy q + bar(q) - star(q) - prime(q) = 0.
constexpr Quaternion conj_prime(const Quaternion& q) { return {q.a, -q.b, -q.c, q.d}; }
constexpr Quaternion conj_bar(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }
constexpr Quaternion conj_star(const Quaternion& q) { return {q.a, q.b, q.c, -q.d}; }

enum class Conjugation { prime, bar, star };

constexpr Quaternion conjugate(const Quaternion& q, Conjugation which) {
    switch (which) {
        case Conjugation::prime: return conj_prime(q);
        case Conjugation::bar: return conj_bar(q);
        case Conjugation::star: return conj_star(q);
    }
    return q;
}

// q^-1 = bar(q) / |q|^2. Throws DomainError on the zero quaternion.
Quaternion inverse(const Quaternion& q);

// q = r exp(u theta) with r = |q| > 0, u a unit imaginary quaternion and
// theta in [0, pi]. For real q (zero imaginary part) u is fixed to i.
struct PolarForm {
    double r;
    Quaternion u;
    double theta;
};
PolarForm polar_decompose(const Quaternion& q);

// exp(a + v) = e^a (cos|v| + (v/|v|) sin|v|) for imaginary part v.
Quaternion exp(const Quaternion& q);

bool approx_equal(const Quaternion& p, const Quaternion& q, double tol);

// Paravector a + b i + c j, the span of {1, i, j} identified with R^3.
struct Paravector {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    constexpr Paravector() = default;
    constexpr Paravector(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {}

    constexpr Quaternion quat() const { return {a, b, c, 0}; }
    constexpr Paravector operator-() const { return {-a, -b, -c}; }
    constexpr Paravector operator+(const Paravector& v) const {
        return {a + v.a, b + v.b, c + v.c};
    }
    constexpr Paravector operator-(const Paravector& v) const {
        return {a - v.a, b - v.b, c - v.c};
    }
    constexpr Paravector operator*(double s) const { return {a * s, b * s, c * s}; }
    constexpr bool operator==(const Paravector& v) const {
        return a == v.a && b == v.b && c == v.c;
    }

    constexpr double norm2() const { return a * a + b * b + c * c; }
    double norm() const { return std::sqrt(norm2()); }
};

inline constexpr Paravector p_one{1, 0, 0};
inline constexpr Paravector p_i{0, 1, 0};
inline constexpr Paravector p_j{0, 0, 1};

bool is_paravector(const Quaternion& q, double tol = 0.0);

// Validates |q.d| <= tol * (1 + |q|) and drops the k component.
Paravector to_paravector(const Quaternion& q, double tol = 0.0);

bool approx_equal(const Paravector& v, const Paravector& w, double tol);

// v . w = Re(v bar(w)) and v x w = ((v bar(w) - w bar(v)) k) / 2, the dot
// and cross products under the (1, i, j) identification of R^3, cyclic so
// that 1 x i = j, i x j = 1, j x 1 = i.
struct ParaDotCross {
    double dot;
    Paravector cross;
};
ParaDotCross para_dot_cross(const Paravector& v, const Paravector& w);

// sigma(q): x -> q x star(q). Preserves the paravector subspace and the
// line Rk; on paravectors it rotates and dilates, on Rk it scales by |q|^2.
Quaternion sigma_apply(const Quaternion& q, const Quaternion& x);
Paravector sigma_apply(const Quaternion& q, const Paravector& v);

// For q = r exp(u theta): rotation by angle 2 theta about the paravector
// axis -u k, with dilation factor |q|^2.
struct SigmaRotation {
    Paravector axis;  // unit
    double angle;     // in [0, 2 pi)
    double dilation;  // |q|^2
};
SigmaRotation sigma_rotation_data(const Quaternion& q);

// Square root within the paravector plane span{1, u}: for v = x + y u with
// u a unit imaginary paravector, returns w = p + q u where p + q i is the
// principal complex square root of x + y i. Then w * star(w) = w^2 = v.
Paravector paravector_sqrt(const Paravector& v);

}  // namespace hspin
