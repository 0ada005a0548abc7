#pragma once

#include <array>

#include "hspin/spinor.hpp"

namespace hspin {

// 2x2 quaternionic matrix, row-major, for quasideterminants. No group
// structure is assumed here, entries are arbitrary.
using Mat2 = std::array<std::array<Quaternion, 2>, 2>;

// Quasideterminant |M|_pq (p, q in {1, 2}, 1-based to mirror the usual
// notation), e.g. |M|_11 = m11 - m12 m22^-1 m21. Throws DomainError when
// the entry to invert is zero (the quasideterminant is undefined there)
// and ArgumentError for indices outside {1, 2}.
Quaternion quasidet_2x2(const Mat2& m, int p, int q);

// Quadruple of spinors, the columns kappa_0 .. kappa_3 of a 2x4 matrix.
using SpinorQuad = std::array<Spinor, 4>;

// Quasi-Pluecker coordinate p^n_{lm} over columns l, m, n in {0,..,3}
// (pairwise distinct) and row choice s in {1, 2}:
//   p^n_{lm} = |(kappa_l kappa_n)|_{s,1}^-1 |(kappa_m kappa_n)|_{s,1},
// independent of s where both rows are defined, and equal to
// {kappa_n, kappa_l}^-1 {kappa_n, kappa_m}. The row-s formula inverts an
// entry of column n (eta_n for s = 1, xi_n for s = 2), so a zero entry
// makes that row's expression undefined even though the coordinate
// itself only needs {kappa_n, kappa_l} != 0; the explicit-s call is
// strict about this and propagates the DomainError.
Quaternion quasi_plucker(const SpinorQuad& q, int l, int m, int n, int s = 1);

// p^n_{lm} p^l_{mn} p^m_{nl} + 1, which vanishes identically
// (Gelfand-Retakh skew-symmetry). Each coordinate is evaluated with the
// row whose column-n entry is larger, so only a genuinely undefined
// coordinate (vanishing bracket) throws.
Quaternion gr_skew_symmetry_residual(const SpinorQuad& q, int l, int m, int n);

// p^l_{ab} p^m_{ba} + p^l_{am} p^b_{ma} - 1, which vanishes identically
// (Gelfand-Retakh quasi-Pluecker relation); with (a, b, l, m) =
// (2, 1, 0, 3) this is the noncommutative Ptolemy residual. Row choice
// as in gr_skew_symmetry_residual.
Quaternion gr_plucker_residual(const SpinorQuad& q, int a, int b, int l, int m);

}  // namespace hspin
