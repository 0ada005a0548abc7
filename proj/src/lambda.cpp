#include "hspin/lambda.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace hspin {

namespace {

// centre of the spinor's horosphere on the boundary sphere
ExtendedParavector centre_of(const Spinor& k, double tol) {
    if (k.eta.norm() <= tol * k.norm()) return ExtendedParavector::infinity();
    return ExtendedParavector::finite(to_paravector(k.xi * inverse(k.eta), 1e-6));
}

Eigen::Vector3d as_vec(const Paravector& v) { return {v.a, v.b, v.c}; }

// frame columns (-sigma(u)(1), sigma(u)(i), sigma(u)(j)) in (1, i, j)
// coordinates of the horizontal boundary plane; u must be unit
Eigen::Matrix3d decoration_frame(const Quaternion& u) {
    Eigen::Matrix3d f;
    f.col(0) = -as_vec(sigma_apply(u, p_one));
    f.col(1) = as_vec(sigma_apply(u, p_i));
    f.col(2) = as_vec(sigma_apply(u, p_j));
    return f;
}

// axis (unit) and angle in [0, pi] of a rotation matrix over the ordered
// orthonormal basis (1, i, j)
void axis_angle(const Eigen::Matrix3d& r, Paravector& axis, double& angle) {
    double c = std::clamp((r.trace() - 1) / 2, -1.0, 1.0);
    angle = std::acos(c);
    Eigen::Vector3d s{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
    s *= 0.5;  // equals axis * sin(angle)
    if (angle < 2.7) {
        double n = s.norm();
        Eigen::Vector3d v = n > 1e-12 ? Eigen::Vector3d(s / n) : Eigen::Vector3d(1, 0, 0);
        axis = {v.x(), v.y(), v.z()};
        return;
    }
    // near a half turn sin(angle) degenerates; use the symmetric part,
    // (r + r^T) / 2 - cos(angle) I = (1 - cos(angle)) axis axis^T
    Eigen::Matrix3d b = (r + r.transpose()) / 2 - c * Eigen::Matrix3d::Identity();
    int col;
    b.diagonal().maxCoeff(&col);
    Eigen::Vector3d v = b.col(col).normalized();
    if (s.dot(v) < 0) v = -v;  // keep axis * sin(angle) aligned with s
    axis = {v.x(), v.y(), v.z()};
}

Quaternion axis_k(const Paravector& v) { return {0, v.c, -v.b, v.a}; }

void require_standard(const Spinor& k1, const Spinor& k2, double tol) {
    if (k1.xi.norm2() == 0 || k1.eta.norm() > tol * k1.norm())
        throw DomainError("first spinor is not centred at infinity");
    if (k2.eta.norm2() == 0 || k2.xi.norm() > tol * k2.norm())
        throw DomainError("second spinor is not centred at 0");
}

}  // namespace

Quaternion lambda_pdet(const Spinor& k1, const Spinor& k2) { return bracket(k1, k2); }

StandardReduction reduce_to_standard(const Spinor& k1, const Spinor& k2, double tol) {
    tol = resolve_tolerance(tol);
    ExtendedParavector z1 = centre_of(k1, tol);
    ExtendedParavector z2 = centre_of(k2, tol);
    if (z1.inf && z2.inf) throw DomainError("spinors share the centre at infinity");
    if (!z1.inf && !z2.inf &&
        (z1.v - z2.v).norm() <= tol * (1 + z1.v.norm() + z2.v.norm()))
        throw DomainError("spinors share a centre");

    CliffordMatrix a1 = z1.inf ? clifford_identity
                               : CliffordMatrix{{}, -q_one, q_one, -z1.v.quat()};
    ExtendedParavector w2 = mobius_apply(a1, z2, tol);
    CliffordMatrix a2 = w2.inf ? clifford_identity
                               : CliffordMatrix{q_one, -w2.v.quat(), {}, q_one};
    CliffordMatrix a = compose(a2, a1);

    Spinor m1 = act_spinor(a, k1);
    Spinor m2 = act_spinor(a, k2);
    if (m1.eta.norm() > 1e-6 * m1.norm() || m2.xi.norm() > 1e-6 * m2.norm())
        throw DomainError("reduction failed; centres are too close");
    return {a, {m1.xi, {}}, {{}, m2.eta}};
}

QuaternionicDistance quaternionic_distance_standard(const Spinor& k1, const Spinor& k2,
                                                    double tol) {
    tol = resolve_tolerance(tol);
    require_standard(k1, k2, tol);
    QuaternionicDistance d;
    d.rho = std::log(k1.xi.norm2() * k2.eta.norm2());
    Quaternion xhat = k1.xi / k1.xi.norm();
    Quaternion rhat = conj_prime(k2.eta) / k2.eta.norm();
    Eigen::Matrix3d rot = decoration_frame(xhat).transpose() * decoration_frame(rhat);
    axis_angle(rot, d.axis, d.theta);
    return d;
}

Quaternion lambda_geometric_standard(const Spinor& k1, const Spinor& k2, double tol) {
    QuaternionicDistance d = quaternionic_distance_standard(k1, k2, tol);
    Quaternion r = Quaternion{std::cos(d.theta / 2)} +
                   axis_k(d.axis) * std::sin(d.theta / 2);
    return r * std::exp(d.rho / 2);
}

Quaternion lambda_geometric(const Spinor& k1, const Spinor& k2, double tol) {
    double rtol = resolve_tolerance(tol);
    ExtendedParavector z1 = centre_of(k1, rtol);
    ExtendedParavector z2 = centre_of(k2, rtol);
    if (z1.inf && z2.inf) return {};
    if (!z1.inf && !z2.inf &&
        (z1.v - z2.v).norm() <= rtol * (1 + z1.v.norm() + z2.v.norm()))
        return {};
    StandardReduction r = reduce_to_standard(k1, k2, tol);
    return lambda_geometric_standard(r.k1, r.k2, tol);
}

Quaternion ptolemy_residual(const Spinor& k0, const Spinor& k1, const Spinor& k2,
                            const Spinor& k3, double tol) {
    tol = resolve_tolerance(tol);
    const Spinor* ks[4] = {&k0, &k1, &k2, &k3};
    Quaternion l[4][4];
    for (int m = 0; m < 4; ++m)
        for (int n = m + 1; n < 4; ++n) {
            l[m][n] = bracket(*ks[m], *ks[n]);
            l[n][m] = -conj_star(l[m][n]);
            if (l[m][n].norm() <= tol * (1 + ks[m]->norm() * ks[n]->norm()))
                throw DomainError("degenerate tetrahedron: two vertices share a centre");
        }
    Quaternion i02 = inverse(l[0][2]);
    return i02 * l[0][1] * inverse(l[3][1]) * l[3][2] +
           i02 * l[0][3] * inverse(l[1][3]) * l[1][2] - q_one;
}

Holonomy triangle_holonomy(const Spinor& k1, const Spinor& k2, const Spinor& k3,
                           double tol) {
    tol = resolve_tolerance(tol);
    Quaternion l32 = bracket(k3, k2);
    if (l32.norm() <= tol * (1 + k3.norm() * k2.norm())) return {{}, true};
    return {bracket(k1, k2) * inverse(l32) * bracket(k3, k1), false};
}

}  // namespace hspin
