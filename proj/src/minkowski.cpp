#include "hspin/minkowski.hpp"

#include <algorithm>
#include <cmath>

namespace hspin {

namespace {

double det3(double a1, double a2, double a3, double b1, double b2, double b3, double c1,
            double c2, double c3) {
    return a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1) + a3 * (b1 * c2 - b2 * c1);
}

// Generalized cross product on the (W, X, Y, Z) slice: the vector n with
// euclidean <n, y> = det[y, a, b, c] for all y, so det[n, a, b, c] = |n|^2.
MinkowskiPoint cross4_spatial(const MinkowskiPoint& a, const MinkowskiPoint& b,
                              const MinkowskiPoint& c) {
    double nw = det3(a.X, a.Y, a.Z, b.X, b.Y, b.Z, c.X, c.Y, c.Z);
    double nx = -det3(a.W, a.Y, a.Z, b.W, b.Y, b.Z, c.W, c.Y, c.Z);
    double ny = det3(a.W, a.X, a.Z, b.W, b.X, b.Z, c.W, c.X, c.Z);
    double nz = -det3(a.W, a.X, a.Y, b.W, b.X, b.Y, c.W, c.X, c.Y);
    return {0, nw, nx, ny, nz};
}

void require_future_null(const MinkowskiPoint& p, double tol) {
    double scale = p.euclidean_norm();
    if (p.T <= tol * (1 + scale)) throw DomainError("basepoint is not future pointing");
    if (std::abs(minkowski_inner(p, p)) > tol * (1 + scale * scale))
        throw DomainError("basepoint is not on the light cone");
}

MinkowskiPoint slice_unit(const Flag& f) {
    MinkowskiPoint s = flag_slice_direction(f);
    double n = s.euclidean_norm();
    return s * (1 / n);
}

}  // namespace

double minkowski_inner(const MinkowskiPoint& p, const MinkowskiPoint& q) {
    return p.T * q.T - p.W * q.W - p.X * q.X - p.Y * q.Y - p.Z * q.Z;
}

bool approx_equal(const MinkowskiPoint& p, const MinkowskiPoint& q, double tol) {
    double scale = std::max({1.0, p.euclidean_norm(), q.euclidean_norm()});
    return (p - q).euclidean_norm() <= tol * scale;
}

HermitianMatrix point_to_hermitian(const MinkowskiPoint& p) {
    Quaternion off{p.W, p.X, p.Y, 0};
    return {Quaternion{(p.T + p.Z) / 2}, off / 2, conj_bar(off) / 2, Quaternion{(p.T - p.Z) / 2}};
}

MinkowskiPoint hermitian_to_point(const HermitianMatrix& s, double tol) {
    tol = resolve_tolerance(tol);
    double scale =
        1 + std::max({s.m11.norm(), s.m12.norm(), s.m21.norm(), s.m22.norm()});
    if (Quaternion{0, s.m11.b, s.m11.c, s.m11.d}.norm() > tol * scale ||
        Quaternion{0, s.m22.b, s.m22.c, s.m22.d}.norm() > tol * scale)
        throw DomainError("diagonal is not real");
    if (std::abs(s.m12.d) > tol * scale || std::abs(s.m21.d) > tol * scale)
        throw DomainError("off-diagonal is not a paravector");
    if ((s.m21 - conj_bar(s.m12)).norm() > tol * scale)
        throw DomainError("matrix is not bar-Hermitian");
    Quaternion off = (s.m12 + conj_bar(s.m21)) * 0.5;  // symmetrize drift away
    return {s.m11.a + s.m22.a, 2 * off.a, 2 * off.b, 2 * off.c, s.m11.a - s.m22.a};
}

MinkowskiPoint phi1(const Spinor& k) {
    Quaternion w = k.xi * conj_bar(k.eta) * 2;
    return {k.norm2(), w.a, w.b, w.c, k.xi.norm2() - k.eta.norm2()};
}

MinkowskiPoint dphi1(const Spinor& k, const Quaternion& nu_xi, const Quaternion& nu_eta,
                     double tol) {
    double m11 = 2 * (k.xi * conj_bar(nu_xi)).a;
    double m22 = 2 * (k.eta * conj_bar(nu_eta)).a;
    Quaternion off = k.xi * conj_bar(nu_eta) + nu_xi * conj_bar(k.eta);
    tol = resolve_tolerance(tol);
    double scale = 1 + k.norm() * (nu_xi.norm() + nu_eta.norm());
    if (std::abs(off.d) > tol * scale)
        throw DomainError("direction is not tangent to the spinor variety");
    return {m11 + m22, 2 * off.a, 2 * off.b, 2 * off.c, m11 - m22};
}

Flag make_flag(const MinkowskiPoint& p, const MinkowskiPoint& v, double tol) {
    tol = resolve_tolerance(tol);
    require_future_null(p, tol);
    double pscale = p.euclidean_norm();
    double vscale = v.euclidean_norm();
    if (std::abs(minkowski_inner(v, p)) > tol * (1 + pscale * vscale))
        throw DomainError("direction is not orthogonal to the basepoint");
    Flag f{p, v};
    if (flag_slice_direction(f).euclidean_norm() <= tol * (1 + vscale))
        throw DomainError("direction is radial (zero mod the basepoint line)");
    return f;
}

MinkowskiPoint flag_slice_direction(const Flag& f) {
    MinkowskiPoint s = f.v - f.p * (f.v.T / f.p.T);
    s.T = 0;
    return s;
}

bool flags_equal(const Flag& f1, const Flag& f2, double tol) {
    tol = resolve_tolerance(tol);
    if (!approx_equal(f1.p, f2.p, tol)) return false;
    return approx_equal(slice_unit(f1), slice_unit(f2), tol);
}

double flag_angle(const Flag& f1, const Flag& f2, double tol) {
    tol = resolve_tolerance(tol);
    if (!approx_equal(f1.p, f2.p, tol)) throw DomainError("flags have different basepoints");
    MinkowskiPoint u1 = slice_unit(f1);
    MinkowskiPoint u2 = slice_unit(f2);
    // slice directions are spacelike; the euclidean dot on the T = 0 slice
    // is minus the Minkowski inner product
    double c = std::clamp(-minkowski_inner(u1, u2), -1.0, 1.0);
    return std::acos(c);
}

Multiflag multiflag_from_spinor(const Spinor& k) {
    Spinor si = section_s(p_i, k);
    Spinor sj = section_s(p_j, k);
    return {phi1(k), dphi1(k, si.xi, si.eta), dphi1(k, sj.xi, sj.eta)};
}

DecoratedIdealPoint multiflag_to_ideal_decoration(const Multiflag& mf, double tol) {
    tol = resolve_tolerance(tol);
    Flag fi = make_flag(mf.p, mf.vi, tol);
    Flag fj = make_flag(mf.p, mf.vj, tol);
    MinkowskiPoint ui = slice_unit(fi);
    MinkowskiPoint uj = slice_unit(fj);
    if (std::abs(minkowski_inner(ui, uj)) > tol)
        throw DomainError("flag directions are not orthogonal");

    double t0 = mf.p.T;
    DecoratedIdealPoint dec;
    dec.ell = mf.p * (1 / t0);
    dec.psii = ui * (2 * t0);
    dec.psij = uj * (2 * t0);
    // radial part of the basepoint, the outward direction in the slice
    MinkowskiPoint radial{0, mf.p.W, mf.p.X, mf.p.Y, mf.p.Z};
    MinkowskiPoint n = cross4_spatial(dec.psii, dec.psij, radial);
    dec.psi1 = n * (2 * t0 / n.euclidean_norm());
    return dec;
}

Multiflag ideal_decoration_to_multiflag(const DecoratedIdealPoint& dec, double tol) {
    tol = resolve_tolerance(tol);
    require_future_null(dec.ell, tol);
    double k2 = -minkowski_inner(dec.psii, dec.psii);
    double t0 = std::sqrt(k2) / 2;
    if (!(t0 > 0)) throw DomainError("decoration has zero norm");
    return {dec.ell * (t0 / dec.ell.T), dec.psii, dec.psij};
}

MinkowskiPoint act_minkowski(const CliffordMatrix& m, const MinkowskiPoint& p) {
    HermitianMatrix s = point_to_hermitian(p);
    Quaternion p11 = m.a * s.m11 + m.b * s.m21;
    Quaternion p12 = m.a * s.m12 + m.b * s.m22;
    Quaternion p21 = m.c * s.m11 + m.d * s.m21;
    Quaternion p22 = m.c * s.m12 + m.d * s.m22;
    HermitianMatrix out{p11 * conj_bar(m.a) + p12 * conj_bar(m.b),
                        p11 * conj_bar(m.c) + p12 * conj_bar(m.d),
                        p21 * conj_bar(m.a) + p22 * conj_bar(m.b),
                        p21 * conj_bar(m.c) + p22 * conj_bar(m.d)};
    return hermitian_to_point(out, 1e-6);
}

}  // namespace hspin
