#pragma once

#include "hspin/spinor.hpp"

namespace hspin {

// Element of SL(2, H_para): a 2x2 quaternionic matrix [[a, b], [c, d]]
// whose columns (a, c) and (b, d) are spinors and whose pseudo-determinant
//   pdet = star(a) d - star(c) b
// equals 1. Equivalently pdet is the bracket of the two columns.
struct CliffordMatrix {
    Quaternion a, b, c, d;

    constexpr Spinor col1() const { return {a, c}; }
    constexpr Spinor col2() const { return {b, d}; }
};

inline constexpr CliffordMatrix clifford_identity{{1}, {0}, {0}, {1}};

struct CliffordCheck {
    bool ok;
    double residual;    // worst violation among the three conditions
    std::string error;  // empty when ok
};

// Ground truth is the minimal condition set: both columns are spinors and
// pdet = 1 within tol (scaled by entry magnitudes). Row conditions and
// paravector constraints on products are consequences, not inputs.
CliffordCheck check_clifford(const CliffordMatrix& m, double tol = 0.0);

// Validates and re-projects: columns are spinor-projected and the matrix is
// right-scaled by 1/sqrt(Re pdet) to renormalize. Throws CliffordError-like
// DomainError when conditions fail beyond tol.
CliffordMatrix make_clifford(const Quaternion& a, const Quaternion& b, const Quaternion& c,
                             const Quaternion& d, double tol = 0.0);

Quaternion pdet(const CliffordMatrix& m);

// [[star(d), -star(b)], [-star(c), star(a)]], the exact inverse in
// SL(2, H_para).
CliffordMatrix inverse(const CliffordMatrix& m);

// Matrix product with drift re-projection (columns re-projected to
// spinors, pdet renormalized by a real scalar).
CliffordMatrix compose(const CliffordMatrix& m1, const CliffordMatrix& m2);

// Point of the boundary R^3 union {infinity} of upper half space.
struct ExtendedParavector {
    Paravector v{};
    bool inf = false;

    static constexpr ExtendedParavector infinity() { return {{}, true}; }
    static constexpr ExtendedParavector finite(const Paravector& p) { return {p, false}; }
};

bool approx_equal(const ExtendedParavector& x, const ExtendedParavector& y, double tol);

// Moebius action v -> (a v + b)(c v + d)^-1 on R^3 union {infinity};
// v = infinity maps to a c^-1 (infinity when c = 0). A finite v maps to
// infinity when |c v + d| <= tol (1 + |c||v| + |d|).
ExtendedParavector mobius_apply(const CliffordMatrix& m, const ExtendedParavector& v,
                                double tol = 0.0);

// Left action on spinor columns: (xi, eta) -> (a xi + b eta, c xi + d eta),
// re-projected. Preserves brackets: {A k1, A k2} = {k1, k2}.
Spinor act_spinor(const CliffordMatrix& m, const Spinor& k);

// Parabolic test: m != 1 and (m - 1)^2 = 0 within tol. The diagnostics
// carry the defining residual plus the derived facts a + star(d) = 2 and
// b, c paravectors, which hold for every parabolic.
struct ParabolicCheck {
    bool parabolic;
    double sq_residual;      // |(m - 1)^2| relative to (1 + |m|)^2
    double trace_residual;   // |a + star(d) - 2|
    double offdiag_residual; // max |k component| of b and c
};
ParabolicCheck is_parabolic(const CliffordMatrix& m, double tol = 0.0);

// The parabolic translation fixing the spinor (a, c):
// [[1 - a star(c), a star(a)], [-c star(c), 1 + c star(a)]].
CliffordMatrix parabolic_from_spinor(const Spinor& k);

// Completes a spinor kappa to (kappa, -kappa-check / |kappa|^2), an
// element of SL(2, H_para) with first column kappa.
CliffordMatrix column_completion(const Spinor& k);

}  // namespace hspin
