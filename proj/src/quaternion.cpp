#include "hspin/quaternion.hpp"

#include <algorithm>
#include <cmath>

namespace hspin {

Quaternion inverse(const Quaternion& q) {
    double n2 = q.norm2();
    if (n2 == 0) throw DomainError("inverse of zero quaternion");
    return conj_bar(q) / n2;
}

PolarForm polar_decompose(const Quaternion& q) {
    double r = q.norm();
    if (r == 0) throw DomainError("polar form of zero quaternion");
    Quaternion im{0, q.b, q.c, q.d};
    double s = im.norm();
    if (s == 0) return {r, q_i, q.a > 0 ? 0.0 : 3.14159265358979323846};
    return {r, im / s, std::atan2(s, q.a)};
}

Quaternion exp(const Quaternion& q) {
    double ea = std::exp(q.a);
    Quaternion im{0, q.b, q.c, q.d};
    double s = im.norm();
    if (s == 0) return {ea, 0, 0, 0};
    return Quaternion{std::cos(s)} * ea + im * (ea * std::sin(s) / s);
}

bool approx_equal(const Quaternion& p, const Quaternion& q, double tol) {
    double scale = std::max({1.0, p.norm(), q.norm()});
    return (p - q).norm() <= tol * scale;
}

bool is_paravector(const Quaternion& q, double tol) {
    tol = resolve_tolerance(tol);
    return std::abs(q.d) <= tol * (1 + q.norm());
}

Paravector to_paravector(const Quaternion& q, double tol) {
    if (!is_paravector(q, tol)) throw DomainError("quaternion has a k component");
    return {q.a, q.b, q.c};
}

bool approx_equal(const Paravector& v, const Paravector& w, double tol) {
    double scale = std::max({1.0, v.norm(), w.norm()});
    return (v - w).norm() <= tol * scale;
}

ParaDotCross para_dot_cross(const Paravector& v, const Paravector& w) {
    Quaternion prod = v.quat() * conj_bar(w.quat());
    // Re(v bar w) is the dot product; the imaginary part is (v x w) k^-1,
    // i.e. cross = (b, c, a-component) after multiplying by k
    Quaternion crossk = (prod - conj_bar(prod)) / 2;  // imaginary part of v bar(w)
    Quaternion cross = crossk * q_k;
    return {prod.a, {cross.a, cross.b, cross.c}};
}

Quaternion sigma_apply(const Quaternion& q, const Quaternion& x) {
    return q * x * conj_star(q);
}

Paravector sigma_apply(const Quaternion& q, const Paravector& v) {
    Quaternion image = q * v.quat() * conj_star(q);
    // exact by construction; guard against rounding in the k slot
    return {image.a, image.b, image.c};
}

SigmaRotation sigma_rotation_data(const Quaternion& q) {
    PolarForm p = polar_decompose(q);
    Quaternion axisq = -(p.u * q_k);  // -u k is a paravector for imaginary u
    double angle = 2 * p.theta;
    constexpr double two_pi = 2 * 3.14159265358979323846;
    if (angle >= two_pi) angle -= two_pi;
    return {{axisq.a, axisq.b, axisq.c}, angle, q.norm2()};
}

Paravector paravector_sqrt(const Paravector& v) {
    double x = v.a;
    Paravector im{0, v.b, v.c};
    double y = im.norm();
    // principal square root of x + y i, y >= 0
    double m = std::sqrt(std::hypot(x, y));
    double half = std::atan2(y, x) / 2;
    double p = m * std::cos(half);
    double s = m * std::sin(half);
    if (y == 0) return x >= 0 ? Paravector{p, 0, 0} : Paravector{0, s, 0};  // u defaults to i
    return Paravector{p, 0, 0} + im * (s / y);
}

}  // namespace hspin
