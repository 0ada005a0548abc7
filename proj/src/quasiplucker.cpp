#include "hspin/quasiplucker.hpp"

namespace hspin {

namespace {

void require_index(int i) {
    if (i < 0 || i > 3) throw ArgumentError("spinor index out of range [0, 3]");
}

void require_distinct(int a, int b) {
    if (a == b) throw ArgumentError("spinor indices must be pairwise distinct");
}

Mat2 pair_matrix(const SpinorQuad& q, int first, int second) {
    return {{{q[first].xi, q[second].xi}, {q[first].eta, q[second].eta}}};
}

// row choice that inverts the larger entry of column n
Quaternion coordinate(const SpinorQuad& q, int l, int m, int n) {
    int s = q[n].eta.norm2() >= q[n].xi.norm2() ? 1 : 2;
    return quasi_plucker(q, l, m, n, s);
}

}  // namespace

Quaternion quasidet_2x2(const Mat2& m, int p, int q) {
    if (p < 1 || p > 2 || q < 1 || q > 2)
        throw ArgumentError("quasideterminant indices must lie in {1, 2}");
    int i = p - 1, j = q - 1;
    const Quaternion& pivot = m[1 - i][1 - j];
    if (pivot.norm2() == 0)
        throw DomainError("quasideterminant undefined: zero entry to invert");
    return m[i][j] - m[i][1 - j] * inverse(pivot) * m[1 - i][j];
}

Quaternion quasi_plucker(const SpinorQuad& q, int l, int m, int n, int s) {
    require_index(l);
    require_index(m);
    require_index(n);
    require_distinct(l, m);
    require_distinct(l, n);
    require_distinct(m, n);
    if (s != 1 && s != 2) throw ArgumentError("row choice s must be 1 or 2");
    Quaternion left = quasidet_2x2(pair_matrix(q, l, n), s, 1);
    Quaternion right = quasidet_2x2(pair_matrix(q, m, n), s, 1);
    return inverse(left) * right;
}

Quaternion gr_skew_symmetry_residual(const SpinorQuad& q, int l, int m, int n) {
    require_index(l);
    require_index(m);
    require_index(n);
    require_distinct(l, m);
    require_distinct(l, n);
    require_distinct(m, n);
    return coordinate(q, l, m, n) * coordinate(q, m, n, l) * coordinate(q, n, l, m) +
           q_one;
}

Quaternion gr_plucker_residual(const SpinorQuad& q, int a, int b, int l, int m) {
    int idx[4] = {a, b, l, m};
    for (int i = 0; i < 4; ++i) {
        require_index(idx[i]);
        for (int j = i + 1; j < 4; ++j) require_distinct(idx[i], idx[j]);
    }
    return coordinate(q, a, b, l) * coordinate(q, b, a, m) +
           coordinate(q, a, m, l) * coordinate(q, m, a, b) - q_one;
}

}  // namespace hspin
