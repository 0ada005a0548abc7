#include "hspin/clifford.hpp"

#include <algorithm>
#include <cmath>

namespace hspin {

namespace {
double entry_scale(const CliffordMatrix& m) {
    return 1 + std::max({m.a.norm(), m.b.norm(), m.c.norm(), m.d.norm()});
}
}  // namespace

CliffordCheck check_clifford(const CliffordMatrix& m, double tol) {
    tol = resolve_tolerance(tol);
    SpinorCheck c1 = check_spinor(m.a, m.c, tol);
    if (!c1.ok) return {false, c1.residual, "first column: " + c1.error};
    SpinorCheck c2 = check_spinor(m.b, m.d, tol);
    if (!c2.ok) return {false, c2.residual, "second column: " + c2.error};
    double pr = (pdet(m) - q_one).norm();
    double scale = entry_scale(m);
    double worst = std::max({std::abs(c1.residual), std::abs(c2.residual), pr});
    if (pr > tol * scale * scale) return {false, worst, "pseudo-determinant is not 1"};
    return {true, worst, ""};
}

CliffordMatrix make_clifford(const Quaternion& a, const Quaternion& b, const Quaternion& c,
                             const Quaternion& d, double tol) {
    Spinor k1 = make_spinor(a, c, tol);  // throws with the column diagnosis
    Spinor k2 = make_spinor(b, d, tol);
    Quaternion p = bracket(k1, k2);
    tol = resolve_tolerance(tol);
    CliffordMatrix m{k1.xi, k2.xi, k1.eta, k2.eta};
    double scale = entry_scale(m);
    if ((p - q_one).norm() > tol * scale * scale)
        throw DomainError("pseudo-determinant is not 1");
    if (p.a > 0) {
        double s = 1 / std::sqrt(p.a);
        m = {m.a * s, m.b * s, m.c * s, m.d * s};
    }
    return m;
}

Quaternion pdet(const CliffordMatrix& m) {
    return conj_star(m.a) * m.d - conj_star(m.c) * m.b;
}

CliffordMatrix inverse(const CliffordMatrix& m) {
    return {conj_star(m.d), -conj_star(m.b), -conj_star(m.c), conj_star(m.a)};
}

CliffordMatrix compose(const CliffordMatrix& m1, const CliffordMatrix& m2) {
    Quaternion a = m1.a * m2.a + m1.b * m2.c;
    Quaternion b = m1.a * m2.b + m1.b * m2.d;
    Quaternion c = m1.c * m2.a + m1.d * m2.c;
    Quaternion d = m1.c * m2.b + m1.d * m2.d;
    // exact in exact arithmetic; spinor-project the columns and rescale to
    // keep long products from drifting off the group
    Spinor k1 = make_spinor(a, c, 1e-6);
    Spinor k2 = make_spinor(b, d, 1e-6);
    CliffordMatrix m{k1.xi, k2.xi, k1.eta, k2.eta};
    double re = bracket(k1, k2).a;
    if (re > 0) {
        double s = 1 / std::sqrt(re);
        m = {m.a * s, m.b * s, m.c * s, m.d * s};
    }
    return m;
}

bool approx_equal(const ExtendedParavector& x, const ExtendedParavector& y, double tol) {
    if (x.inf || y.inf) return x.inf == y.inf;
    return approx_equal(x.v, y.v, tol);
}

ExtendedParavector mobius_apply(const CliffordMatrix& m, const ExtendedParavector& v,
                                double tol) {
    tol = resolve_tolerance(tol);
    if (v.inf) {
        if (m.c.norm() <= tol * (1 + m.a.norm())) return ExtendedParavector::infinity();
        return ExtendedParavector::finite(
            to_paravector(m.a * inverse(m.c), 1e-6));
    }
    Quaternion q = v.v.quat();
    Quaternion num = m.a * q + m.b;
    Quaternion den = m.c * q + m.d;
    if (den.norm() <= tol * (1 + m.c.norm() * v.v.norm() + m.d.norm()))
        return ExtendedParavector::infinity();
    return ExtendedParavector::finite(to_paravector(num * inverse(den), 1e-6));
}

Spinor act_spinor(const CliffordMatrix& m, const Spinor& k) {
    return make_spinor(m.a * k.xi + m.b * k.eta, m.c * k.xi + m.d * k.eta, 1e-6);
}

ParabolicCheck is_parabolic(const CliffordMatrix& m, double tol) {
    tol = resolve_tolerance(tol);
    CliffordMatrix s{m.a - q_one, m.b, m.c, m.d - q_one};
    double smag = std::max({s.a.norm(), s.b.norm(), s.c.norm(), s.d.norm()});
    Quaternion sq_a = s.a * s.a + s.b * s.c;
    Quaternion sq_b = s.a * s.b + s.b * s.d;
    Quaternion sq_c = s.c * s.a + s.d * s.c;
    Quaternion sq_d = s.c * s.b + s.d * s.d;
    double sq = std::max({sq_a.norm(), sq_b.norm(), sq_c.norm(), sq_d.norm()});
    double scale = entry_scale(m);
    ParabolicCheck out{};
    out.sq_residual = sq / (scale * scale);
    out.trace_residual = (m.a + conj_star(m.d) - Quaternion{2}).norm();
    out.offdiag_residual = std::max(std::abs(m.b.d), std::abs(m.c.d));
    out.parabolic = smag > tol * scale && out.sq_residual <= tol;
    return out;
}

CliffordMatrix parabolic_from_spinor(const Spinor& k) {
    const Quaternion& a = k.xi;
    const Quaternion& c = k.eta;
    return {q_one - a * conj_star(c), a * conj_star(a), -(c * conj_star(c)),
            q_one + c * conj_star(a)};
}

CliffordMatrix column_completion(const Spinor& k) {
    double n2 = k.norm2();
    if (n2 == 0) throw DomainError("cannot complete the zero spinor");
    Spinor second = -complementary(k) * (1.0 / n2);
    return {k.xi, second.xi, k.eta, second.eta};
}

}  // namespace hspin
