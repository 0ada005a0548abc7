#pragma once

#include "hspin/horosphere.hpp"

namespace hspin {

// Lambda length as the pseudo-determinant of the column matrix, i.e. the
// bracket {k1, k2}. Zero exactly when the spinors share a centre.
// Antisymmetric up to star: lambda(k2, k1) = -star(lambda(k1, k2)).
Quaternion lambda_pdet(const Spinor& k1, const Spinor& k2);

// Clifford matrix A moving the pair so that A k1 has centre infinity
// (eta component 0) and A k2 has centre 0 (xi component 0): an inversion
// about the first centre (skipped when it is already infinity) followed
// by the translation taking the image of the second centre to 0. The
// returned spinors have the small components snapped to exact zero.
// Throws DomainError when the centres coincide within tol.
struct StandardReduction {
    CliffordMatrix A;
    Spinor k1;  // (xi, 0)
    Spinor k2;  // (0, eta)
};
StandardReduction reduce_to_standard(const Spinor& k1, const Spinor& k2, double tol = 0.0);

// Distance-with-spin between two decorated horospheres in standard
// position: rho is the signed hyperbolic distance between their
// intersection points with the common vertical geodesic, and (theta,
// axis) the rotation carrying the inward frame of the first decoration,
// parallel-transported along the geodesic, to the outward frame of the
// second. (axis, theta) and (-axis, -theta) describe the same rotation;
// theta is reported in [0, pi].
struct QuaternionicDistance {
    double rho = 0;
    double theta = 0;
    Paravector axis;  // unit
};
QuaternionicDistance quaternionic_distance_standard(const Spinor& k1, const Spinor& k2,
                                                    double tol = 0.0);

// Geometric lambda length for a pair in standard position, k1 = (xi, 0)
// and k2 = (0, eta), computed from the decorated horospheres themselves:
// exp(d / 2) for the quaternionic distance d = rho + theta v k above,
// with rho = log(|xi|^2 |eta|^2). Defined up to sign (frames see theta
// mod 2 pi); one representative is returned.
Quaternion lambda_geometric_standard(const Spinor& k1, const Spinor& k2, double tol = 0.0);

// reduce_to_standard followed by lambda_geometric_standard; returns 0 for
// coincident centres (the defined value for a shared ideal point).
Quaternion lambda_geometric(const Spinor& k1, const Spinor& k2, double tol = 0.0);

// Residual of the noncommutative Ptolemy equation on an ideal tetrahedron
// (k0, k1, k2, k3):
//   l02^-1 l01 l31^-1 l32 + l02^-1 l03 l13^-1 l12 - 1
// with l_mn = lambda(k_m, k_n). Throws DomainError when any pairwise
// lambda vanishes (degenerate tetrahedron: two vertices coincide).
Quaternion ptolemy_residual(const Spinor& k0, const Spinor& k1, const Spinor& k2,
                            const Spinor& k3, double tol = 0.0);

// Triangle holonomy l12 l32^-1 l31 of (k1, k2, k3); fixed by star, so its
// value lies in the paravectors union {infinity}. Infinite when l32 = 0.
struct Holonomy {
    Quaternion value;
    bool inf = false;
};
Holonomy triangle_holonomy(const Spinor& k1, const Spinor& k2, const Spinor& k3,
                           double tol = 0.0);

}  // namespace hspin
