#pragma once

#include <array>

#include "hspin/minkowski.hpp"

namespace hspin {

// Horosphere in the hyperboloid model: phi2(p) = {x : <x, p> = 1} for p on
// the future light cone.
struct Horosphere {
    MinkowskiPoint p;
};

// Validates p null and future (T > 0). Throws DomainError otherwise.
Horosphere phi2(const MinkowskiPoint& p, double tol = 0.0);

// Membership: x on the hyperboloid (<x, x> = 1, T > 0) with <x, p> = 1.
bool horosphere_contains(const Horosphere& h, const MinkowskiPoint& x, double tol = 0.0);

// Light cone to upper half space boundary: (W + X i + Y j) / (T - Z),
// infinity when T - Z <= tol * T. Requires p null and future.
ExtendedParavector boundary_to_uhs(const MinkowskiPoint& p, double tol = 0.0);

// Hyperboloid interior to the unit disc: (1 / (1 + T)) (W, X, Y, Z).
std::array<double, 4> hyperboloid_to_disc(const MinkowskiPoint& x, double tol = 0.0);

// Light cone to the unit sphere bounding the disc: (1 / T) (W, X, Y, Z).
std::array<double, 4> boundary_to_disc(const MinkowskiPoint& p, double tol = 0.0);

// Disc boundary (w, x, y, z), |.| = 1, to upper half space boundary:
// (w + x i + y j) / (1 - z), infinity at the north pole z = 1.
ExtendedParavector disc_boundary_to_uhs(const std::array<double, 4>& q, double tol = 0.0);

// Decorated horosphere in the upper half space model. For centre != inf,
// size is the Euclidean diameter and the directions are specified at the
// north pole (top point); for centre = inf the horosphere is the
// horizontal plane at height size, directions specified on it.
struct DecoratedHorosphere {
    ExtendedParavector center;
    double size;
    Paravector dir_i;  // unit
    Paravector dir_j;  // unit
};

// Spinor (xi, eta) -> decorated horosphere:
//   eta != 0: centre xi eta^-1, diameter |eta|^-2,
//             dir_i = sigma(eta^-1*)(i) normalized, dir_j likewise;
//   eta  = 0: centre inf, height |xi|^2, dir_i = sigma(xi)(i) normalized.
// The eta = 0 branch is taken when |eta| <= tol * |kappa|.
DecoratedHorosphere decorated_horosphere_from_spinor(const Spinor& k, double tol = 0.0);

}  // namespace hspin
