#include "hspin/spinor.hpp"

namespace hspin {

namespace {
// k part of star(xi) eta on components; the spinor condition is its vanishing
double spinor_residual(const Quaternion& x, const Quaternion& y) {
    return x.a * y.d + x.b * y.c - x.c * y.b - x.d * y.a;
}
}  // namespace

SpinorCheck check_spinor(const Quaternion& xi, const Quaternion& eta, double tol) {
    tol = resolve_tolerance(tol);
    if (xi.norm2() == 0 && eta.norm2() == 0) return {false, 0, "zero spinor"};
    double r = spinor_residual(xi, eta);
    if (std::abs(r) > tol * (xi.norm() * eta.norm() + 1))
        return {false, r, "xi bar(eta) is not a paravector"};
    return {true, r, ""};
}

Spinor make_spinor(const Quaternion& xi, const Quaternion& eta, double tol) {
    SpinorCheck chk = check_spinor(xi, eta, tol);
    if (!chk.ok) throw DomainError("not a spinor: " + chk.error);
    if (chk.residual == 0 || xi.norm2() == 0 || eta.norm2() == 0) return {xi, eta};
    // solve the smaller component from the larger one so the discarded k part
    // is never amplified by a near-zero inverse
    if (xi.norm2() >= eta.norm2()) {
        Quaternion m = xi * conj_bar(eta);
        m.d = 0;
        return {xi, conj_bar(inverse(xi) * m)};
    }
    Quaternion m = eta * conj_bar(xi);
    m.d = 0;
    return {conj_bar(inverse(eta) * m), eta};
}

Quaternion bracket(const Spinor& k1, const Spinor& k2) {
    return conj_star(k1.xi) * k2.eta - conj_star(k1.eta) * k2.xi;
}

Spinor complementary(const Spinor& k) {
    return {conj_prime(k.eta), -conj_prime(k.xi)};
}

Spinor section_s(const Paravector& v, const Spinor& k) {
    return complementary(k) * v.quat();
}

TangentDecomposition decompose_tangent(const Spinor& k, const Quaternion& nu_xi,
                                       const Quaternion& nu_eta, double tol) {
    double n2 = k.norm2();
    if (n2 == 0) throw DomainError("tangent decomposition at the zero spinor");
    Quaternion x = (conj_bar(k.xi) * nu_xi + conj_bar(k.eta) * nu_eta) / n2;
    Quaternion y = (conj_star(k.eta) * nu_xi - conj_star(k.xi) * nu_eta) / n2;
    tol = resolve_tolerance(tol);
    double scale = 1 + (nu_xi.norm() + nu_eta.norm()) / std::sqrt(n2);
    if (std::abs(y.d) > tol * scale)
        throw DomainError("vector is not tangent to the spinor space");
    return {x, {y.a, y.b, y.c}};
}

double inner_product(const Spinor& k1, const Spinor& k2) {
    return (k1.xi * conj_bar(k2.xi) + k1.eta * conj_bar(k2.eta)).a;
}

}  // namespace hspin
