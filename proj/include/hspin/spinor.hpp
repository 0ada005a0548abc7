#pragma once

#include <utility>

#include "hspin/quaternion.hpp"

namespace hspin {

// A spinor is a pair (xi, eta) != (0, 0) with xi bar(eta) a paravector,
// equivalently star(xi) eta a paravector, equivalently
//   x0 y3 + x1 y2 - x2 y1 - x3 y0 = 0
// on components. Instances are produced by make_spinor, which validates
// and re-projects, so a Spinor in hand satisfies the condition to
// rounding accuracy even when the input only satisfied it within tol.
struct Spinor {
    Quaternion xi;
    Quaternion eta;

    constexpr double norm2() const { return xi.norm2() + eta.norm2(); }
    double norm() const { return std::sqrt(norm2()); }

    constexpr Spinor operator-() const { return {-xi, -eta}; }
    // Right scalar action kappa x, used throughout: (xi x, eta x).
    constexpr Spinor operator*(const Quaternion& x) const { return {xi * x, eta * x}; }
    constexpr Spinor operator*(double s) const { return {xi * s, eta * s}; }
};

struct SpinorCheck {
    bool ok;
    double residual;    // x0 y3 + x1 y2 - x2 y1 - x3 y0, the k part of star(xi) eta
    std::string error;  // empty when ok
};

// Accepts iff (xi, eta) != (0, 0) and |residual| <= tol * (|xi||eta| + 1).
SpinorCheck check_spinor(const Quaternion& xi, const Quaternion& eta, double tol = 0.0);

// Validates, then re-projects: replaces eta so that xi bar(eta) is exactly
// a paravector (zero the k component and solve back; no-op when xi = 0).
// Throws DomainError when the pair is not a spinor within tol.
Spinor make_spinor(const Quaternion& xi, const Quaternion& eta, double tol = 0.0);

// {k1, k2} = star(xi1) eta2 - star(eta1) xi2. Antisymmetric up to star:
// {k2, k1} = -star({k1, k2}); and {k1 x1, k2 x2} = star(x1) {k1, k2} x2.
// Vanishes exactly when the spinors share an ideal point (k2 = k1 x).
Quaternion bracket(const Spinor& k1, const Spinor& k2);

// kappa-check = (prime(eta), -prime(xi)). Satisfies |check| = |kappa|,
// <kappa, check> = 0, {kappa, check} = -|kappa|^2, and applying it twice
// gives -kappa.
Spinor complementary(const Spinor& k);

// s_v(kappa) = kappa-check * v, a section of the tangent directions
// transverse to the fibre: {kappa, s_v(kappa)} = -v |kappa|^2.
Spinor section_s(const Paravector& v, const Spinor& k);

// Writes a tangent vector nu = (nu_xi, nu_eta) at kappa as
// nu = kappa x + kappa-check y with x a quaternion and y a paravector:
//   x = (bar(xi) nu_xi + bar(eta) nu_eta) / |kappa|^2
//   y = (star(eta) nu_xi - star(xi) nu_eta) / |kappa|^2.
// Throws DomainError if nu is not tangent (y picks up a k component).
struct TangentDecomposition {
    Quaternion x;
    Paravector y;
};
TangentDecomposition decompose_tangent(const Spinor& k, const Quaternion& nu_xi,
                                       const Quaternion& nu_eta, double tol = 0.0);

// Euclidean inner product Re(xi1 bar(xi2) + eta1 bar(eta2)), the R^8 dot.
double inner_product(const Spinor& k1, const Spinor& k2);

}  // namespace hspin
