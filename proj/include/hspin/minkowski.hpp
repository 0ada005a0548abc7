#pragma once

#include "hspin/clifford.hpp"

namespace hspin {

// Point of Minkowski space R^{1,4} with signature (+,-,-,-,-) and
// coordinates (T, W, X, Y, Z).
struct MinkowskiPoint {
    double T = 0, W = 0, X = 0, Y = 0, Z = 0;

    constexpr MinkowskiPoint operator+(const MinkowskiPoint& p) const {
        return {T + p.T, W + p.W, X + p.X, Y + p.Y, Z + p.Z};
    }
    constexpr MinkowskiPoint operator-(const MinkowskiPoint& p) const {
        return {T - p.T, W - p.W, X - p.X, Y - p.Y, Z - p.Z};
    }
    constexpr MinkowskiPoint operator-() const { return {-T, -W, -X, -Y, -Z}; }
    constexpr MinkowskiPoint operator*(double s) const {
        return {T * s, W * s, X * s, Y * s, Z * s};
    }
    // Euclidean magnitude, used only for tolerance scaling.
    double euclidean_norm() const { return std::sqrt(T * T + W * W + X * X + Y * Y + Z * Z); }
};

double minkowski_inner(const MinkowskiPoint& p, const MinkowskiPoint& q);
bool approx_equal(const MinkowskiPoint& p, const MinkowskiPoint& q, double tol);

// Paravector Hermitian 2x2 matrix: real diagonal, off-diagonal entries
// mutually bar-conjugate paravectors. The correspondence with R^{1,4} is
//   (T, W, X, Y, Z) <-> (1/2) [[T + Z, W + X i + Y j], [W - X i - Y j, T - Z]].
struct HermitianMatrix {
    Quaternion m11, m12, m21, m22;
};

HermitianMatrix point_to_hermitian(const MinkowskiPoint& p);

// Validates Hermitian paravector shape within tol and converts back,
// symmetrizing away last-bit drift.
MinkowskiPoint hermitian_to_point(const HermitianMatrix& s, double tol = 0.0);

// phi1(kappa) = kappa bar(kappa)^T, in coordinates
//   T = |kappa|^2, W + X i + Y j = 2 xi bar(eta), Z = |xi|^2 - |eta|^2.
// Lands on the future light cone; fibres are kappa alpha, |alpha| = 1.
MinkowskiPoint phi1(const Spinor& k);

// Derivative of phi1 at kappa in direction nu:
//   D phi1(nu) = kappa bar(nu)^T + nu bar(kappa)^T.
// Defined for nu tangent to the spinor variety; throws DomainError when
// the off-diagonal picks up a k component (the one non-tangent direction).
MinkowskiPoint dphi1(const Spinor& k, const Quaternion& nu_xi, const Quaternion& nu_eta,
                     double tol = 0.0);

// Null flag [[p, v]]: basepoint p on the future light cone, direction
// v in p-perp, nonzero mod p R. Flags are compared through their
// basepoints and the positive ray of v mod p R.
struct Flag {
    MinkowskiPoint p;
    MinkowskiPoint v;
};

Flag make_flag(const MinkowskiPoint& p, const MinkowskiPoint& v, double tol = 0.0);

// Representative of v mod p R in the T = 0 slice: v - (v_T / p_T) p.
MinkowskiPoint flag_slice_direction(const Flag& f);

// Equal iff same basepoint and the slice directions are positive
// multiples of each other (compared unit-normalized, within tol).
bool flags_equal(const Flag& f1, const Flag& f2, double tol = 0.0);

// Angle between two flags at the same basepoint, from the Minkowski inner
// product of unit slice directions. Throws DomainError on distinct
// basepoints.
double flag_angle(const Flag& f1, const Flag& f2, double tol = 0.0);

// Multiflag [[p, v^i, v^j]]: two orthogonal flags over one basepoint.
struct Multiflag {
    MinkowskiPoint p;
    MinkowskiPoint vi;
    MinkowskiPoint vj;
};

// Phi1(kappa) = [[phi1(kappa), D phi1(s_i kappa), D phi1(s_j kappa)]].
// Injective up to sign: Phi1(k1) = Phi1(k2) iff k1 = +-k2.
Multiflag multiflag_from_spinor(const Spinor& k);

// Decorated ideal point: the ray ell (stored as its T = 1 representative)
// together with lifts psi(1), psi(i), psi(j) chosen in the T = 0 slice of
// ell-perp, pairwise orthogonal, each of Minkowski norm K = -4 T0^2 where
// T0 is the T coordinate of the multiflag basepoint, oriented so that
// det[psi1, psii, psij, outward radial] > 0 in (W, X, Y, Z).
struct DecoratedIdealPoint {
    MinkowskiPoint ell;
    MinkowskiPoint psi1, psii, psij;
};

DecoratedIdealPoint multiflag_to_ideal_decoration(const Multiflag& mf, double tol = 0.0);

// Inverse construction: recovers the basepoint from the decoration norm
// and reuses psi(i), psi(j) as flag directions. Round trips with
// multiflag_to_ideal_decoration up to flags_equal.
Multiflag ideal_decoration_to_multiflag(const DecoratedIdealPoint& dec, double tol = 0.0);

// Isometric SL(2, H_para) action S -> A S bar(A)^T through the Hermitian
// picture. Commutes with phi1: act_minkowski(A, phi1 k) = phi1(act_spinor(A, k)).
MinkowskiPoint act_minkowski(const CliffordMatrix& m, const MinkowskiPoint& p);

}  // namespace hspin
