#include "hspin/horosphere.hpp"

#include <cmath>

namespace hspin {

namespace {
void require_future_null(const MinkowskiPoint& p, double tol) {
    double scale = p.euclidean_norm();
    if (p.T <= tol * (1 + scale)) throw DomainError("point is not future pointing");
    if (std::abs(minkowski_inner(p, p)) > tol * (1 + scale * scale))
        throw DomainError("point is not on the light cone");
}
}  // namespace

Horosphere phi2(const MinkowskiPoint& p, double tol) {
    tol = resolve_tolerance(tol);
    require_future_null(p, tol);
    return {p};
}

bool horosphere_contains(const Horosphere& h, const MinkowskiPoint& x, double tol) {
    tol = resolve_tolerance(tol);
    double scale = 1 + x.euclidean_norm() * (1 + h.p.euclidean_norm());
    if (x.T <= 0) return false;
    if (std::abs(minkowski_inner(x, x) - 1) > tol * scale) return false;
    return std::abs(minkowski_inner(x, h.p) - 1) <= tol * scale;
}

ExtendedParavector boundary_to_uhs(const MinkowskiPoint& p, double tol) {
    tol = resolve_tolerance(tol);
    require_future_null(p, tol);
    double depth = p.T - p.Z;
    if (depth <= tol * p.T) return ExtendedParavector::infinity();
    return ExtendedParavector::finite({p.W / depth, p.X / depth, p.Y / depth});
}

std::array<double, 4> hyperboloid_to_disc(const MinkowskiPoint& x, double tol) {
    tol = resolve_tolerance(tol);
    double scale = 1 + x.euclidean_norm();
    if (x.T <= 0 || std::abs(minkowski_inner(x, x) - 1) > tol * scale * scale)
        throw DomainError("point is not on the hyperboloid");
    double f = 1 / (1 + x.T);
    return {x.W * f, x.X * f, x.Y * f, x.Z * f};
}

std::array<double, 4> boundary_to_disc(const MinkowskiPoint& p, double tol) {
    tol = resolve_tolerance(tol);
    require_future_null(p, tol);
    return {p.W / p.T, p.X / p.T, p.Y / p.T, p.Z / p.T};
}

ExtendedParavector disc_boundary_to_uhs(const std::array<double, 4>& q, double tol) {
    tol = resolve_tolerance(tol);
    double n2 = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
    if (std::abs(n2 - 1) > 2 * tol) throw DomainError("point is not on the unit sphere");
    double depth = 1 - q[3];
    if (depth <= tol) return ExtendedParavector::infinity();
    return ExtendedParavector::finite({q[0] / depth, q[1] / depth, q[2] / depth});
}

DecoratedHorosphere decorated_horosphere_from_spinor(const Spinor& k, double tol) {
    tol = resolve_tolerance(tol);
    double kn = k.norm();
    if (kn == 0) throw DomainError("zero spinor");
    DecoratedHorosphere h;
    if (k.eta.norm() <= tol * kn) {
        h.center = ExtendedParavector::infinity();
        h.size = k.xi.norm2();
        Quaternion u = k.xi / k.xi.norm();
        h.dir_i = sigma_apply(u, p_i);
        h.dir_j = sigma_apply(u, p_j);
    } else {
        h.center = ExtendedParavector::finite(to_paravector(k.xi * inverse(k.eta), 1e-6));
        h.size = 1 / k.eta.norm2();
        Quaternion u = conj_star(inverse(k.eta));
        u = u / u.norm();
        h.dir_i = sigma_apply(u, p_i);
        h.dir_j = sigma_apply(u, p_j);
    }
    return h;
}

}  // namespace hspin
