#include <doctest.h>

#include "approx.hpp"
#include "hspin/clifford.hpp"
#include "hspin/random.hpp"

using namespace hspin;

namespace {

bool matrix_approx(const CliffordMatrix& m, const CliffordMatrix& n, double tol) {
    return approx_equal(m.a, n.a, tol) && approx_equal(m.b, n.b, tol) &&
           approx_equal(m.c, n.c, tol) && approx_equal(m.d, n.d, tol);
}

const CliffordMatrix J{{0}, {-1}, {1}, {0}};  // inversion generator

}  // namespace

TEST_CASE("clifford validation") {
    CHECK(check_clifford(clifford_identity).ok);
    CHECK(check_clifford(J).ok);
    // pdet = star(j)(-j) = -j^2 = 1
    CHECK(check_clifford(CliffordMatrix{q_j, {}, {}, -q_j}).ok);
    // pdet = star(j) j = -1
    CliffordCheck c = check_clifford(CliffordMatrix{q_j, {}, {}, q_j});
    CHECK(!c.ok);
    CHECK(c.residual == doctest::Approx(2).epsilon(1e-14));  // |pdet - 1|
    // non-spinor column
    c = check_clifford(CliffordMatrix{Quaternion{1, 0, 0, 1}, {}, {1}, {1}});
    CHECK(!c.ok);

    CHECK_THROWS_AS(make_clifford(q_j, {}, {}, q_j), DomainError);

    // translations [[1, v], [0, 1]] are valid for any paravector v
    CHECK(check_clifford(CliffordMatrix{{1}, {2, 1, -3, 0}, {}, {1}}).ok);
}

TEST_CASE("pdet") {
    CHECK(approx_equal(pdet(J), q_one, kTight));
    CHECK(approx_equal(pdet(CliffordMatrix{q_j, {}, {}, q_j}), -q_one, kTight));
    // pdet is the bracket of the columns
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        CliffordMatrix m = random_clifford(rng, 5);
        CHECK(approx_equal(pdet(m), bracket(m.col1(), m.col2()), kTight));
        CHECK(approx_equal(pdet(m), q_one, 1e-10));
    }
}

TEST_CASE("inverse matrix") {
    CliffordMatrix ji = inverse(J);
    CHECK(matrix_approx(ji, CliffordMatrix{{0}, {1}, {-1}, {0}}, kTight));

    CliffordMatrix tr{{1}, {1, 2, 3, 0}, {}, {1}};
    CHECK(matrix_approx(inverse(tr), CliffordMatrix{{1}, {-1, -2, -3, 0}, {}, {1}}, kTight));

    Rng rng(32);
    for (int t = 0; t < 100; ++t) {
        CliffordMatrix m = random_clifford(rng, 6);
        CHECK(matrix_approx(compose(m, inverse(m)), clifford_identity, 1e-9));
        CHECK(matrix_approx(compose(inverse(m), m), clifford_identity, 1e-9));
    }
}

TEST_CASE("compose") {
    CHECK(matrix_approx(compose(J, J), CliffordMatrix{{-1}, {0}, {0}, {-1}}, kTight));
    Rng rng(33);
    for (int t = 0; t < 50; ++t) {
        CliffordMatrix a = random_clifford(rng, 4);
        CliffordMatrix b = random_clifford(rng, 4);
        CliffordMatrix c = random_clifford(rng, 4);
        CHECK(matrix_approx(compose(compose(a, b), c), compose(a, compose(b, c)), 1e-9));
        CHECK(check_clifford(compose(a, b)).ok);
    }
}

TEST_CASE("mobius action on fixed inputs") {
    auto one = ExtendedParavector::finite(p_one);
    auto res = mobius_apply(J, one);
    CHECK(!res.inf);
    CHECK(approx_equal(res.v, -p_one, kTight));

    res = mobius_apply(J, ExtendedParavector::infinity());
    CHECK(!res.inf);
    CHECK(res.v.norm() <= kTight);

    res = mobius_apply(J, ExtendedParavector::finite({}));
    CHECK(res.inf);

    // translation
    CliffordMatrix tr{{1}, {1, 2, 3, 0}, {}, {1}};
    res = mobius_apply(tr, ExtendedParavector::finite({1, 0, -1}));
    CHECK(approx_equal(res.v, Paravector{2, 2, 2}, kTight));
    CHECK(mobius_apply(tr, ExtendedParavector::infinity()).inf);

    // diagonal [[2, 0], [0, 1/2]] dilates by 4
    CliffordMatrix dil{{2}, {}, {}, {0.5}};
    res = mobius_apply(dil, one);
    CHECK(approx_equal(res.v, Paravector{4, 0, 0}, kTight));
}

TEST_CASE("mobius is a group action") {
    Rng rng(34);
    for (int t = 0; t < 100; ++t) {
        CliffordMatrix a = random_clifford(rng, 4);
        CliffordMatrix b = random_clifford(rng, 4);
        ExtendedParavector v = ExtendedParavector::finite(random_paravector(rng));
        if (t % 7 == 0) v = ExtendedParavector::infinity();
        ExtendedParavector lhs = mobius_apply(compose(a, b), v);
        ExtendedParavector rhs = mobius_apply(a, mobius_apply(b, v));
        CHECK(approx_equal(lhs, rhs, 1e-7));
    }
}

TEST_CASE("act_spinor") {
    CliffordMatrix tr{{1}, {1, 2, 3, 0}, {}, {1}};
    Spinor k01 = make_spinor({}, q_one);
    Spinor moved = act_spinor(tr, k01);
    CHECK(approx_equal(moved.xi, Quaternion{1, 2, 3, 0}, kTight));
    CHECK(approx_equal(moved.eta, q_one, kTight));

    Rng rng(35);
    for (int t = 0; t < 200; ++t) {
        CliffordMatrix m = random_clifford(rng, 5);
        Spinor k1 = random_spinor(rng);
        Spinor k2 = random_spinor(rng);
        // brackets are invariant
        Quaternion before = bracket(k1, k2);
        Quaternion after = bracket(act_spinor(m, k1), act_spinor(m, k2));
        CHECK(approx_equal(before, after, 1e-9));
        // the action is by valid spinors
        Spinor mk = act_spinor(m, k1);
        CHECK(check_spinor(mk.xi, mk.eta).ok);
    }
}

TEST_CASE("action on centres matches mobius action") {
    Rng rng(36);
    for (int t = 0; t < 200; ++t) {
        CliffordMatrix m = random_clifford(rng, 5);
        Spinor k = random_spinor(rng);
        ExtendedParavector centre =
            k.eta.norm() == 0.0
                ? ExtendedParavector::infinity()
                : ExtendedParavector::finite(to_paravector(k.xi * inverse(k.eta), 1e-7));
        Spinor mk = act_spinor(m, k);
        ExtendedParavector moved =
            mk.eta.norm() <= 1e-9 * mk.norm()
                ? ExtendedParavector::infinity()
                : ExtendedParavector::finite(to_paravector(mk.xi * inverse(mk.eta), 1e-6));
        CHECK(approx_equal(moved, mobius_apply(m, centre), 1e-6));
    }
}

TEST_CASE("parabolic classification") {
    CliffordMatrix p0{{1}, {1}, {0}, {1}};
    ParabolicCheck pc = is_parabolic(p0);
    CHECK(pc.parabolic);
    CHECK(pc.trace_residual <= kTight);
    CHECK(pc.offdiag_residual <= kTight);

    CHECK(!is_parabolic(clifford_identity).parabolic);
    CHECK(!is_parabolic(J).parabolic);
    CHECK(!is_parabolic(CliffordMatrix{{2}, {}, {}, {0.5}}).parabolic);

    Rng rng(37);
    for (int t = 0; t < 100; ++t) {
        CliffordMatrix b = random_clifford(rng, 4);
        CliffordMatrix conj = compose(compose(b, p0), inverse(b));
        ParabolicCheck c = is_parabolic(conj, 1e-8);
        CHECK(c.parabolic);
        CHECK(c.trace_residual <= 1e-8 * (1 + conj.a.norm() + conj.d.norm()));
        CHECK(c.offdiag_residual <= 1e-8 * (1 + conj.b.norm() + conj.c.norm()));
    }
}

TEST_CASE("parabolic_from_spinor") {
    Spinor k10 = make_spinor(q_one, {});
    CHECK(matrix_approx(parabolic_from_spinor(k10), CliffordMatrix{{1}, {1}, {0}, {1}}, kTight));

    Spinor k01 = make_spinor({}, q_one);
    CHECK(matrix_approx(parabolic_from_spinor(k01), CliffordMatrix{{1}, {0}, {-1}, {1}}, kTight));

    // a = j: a star(a) = j^2 = -1 (star fixes j)
    Spinor kj0 = make_spinor(q_j, {});
    CHECK(matrix_approx(parabolic_from_spinor(kj0), CliffordMatrix{{1}, {-1}, {0}, {1}}, kTight));

    Rng rng(38);
    for (int t = 0; t < 200; ++t) {
        Spinor k = random_spinor(rng);
        CliffordMatrix p = parabolic_from_spinor(k);
        CHECK(check_clifford(p).ok);
        CHECK(is_parabolic(p, 1e-9).parabolic);
        // fixes its spinor
        Spinor fixed = act_spinor(p, k);
        CHECK(approx_equal(fixed.xi, k.xi, 1e-10));
        CHECK(approx_equal(fixed.eta, k.eta, 1e-10));
    }
}

TEST_CASE("column completion") {
    Spinor k01 = make_spinor({}, q_one);
    CHECK(matrix_approx(column_completion(k01), J, kTight));

    Spinor k20 = make_spinor(Quaternion{2}, {});
    CHECK(matrix_approx(column_completion(k20), CliffordMatrix{{2}, {0}, {0}, {0.5}}, kTight));

    CHECK(matrix_approx(column_completion(make_spinor(q_one, {})), clifford_identity, kTight));

    Rng rng(39);
    for (int t = 0; t < 200; ++t) {
        Spinor k = random_spinor(rng);
        CliffordMatrix m = column_completion(k);
        CHECK(check_clifford(m).ok);
        CHECK(approx_equal(m.a, k.xi, kTight));
        CHECK(approx_equal(m.c, k.eta, kTight));
    }
}

TEST_CASE("random_clifford determinism") {
    CliffordMatrix a = random_clifford(std::uint64_t{7}, 6);
    CliffordMatrix b = random_clifford(std::uint64_t{7}, 6);
    CHECK(a.a == b.a);
    CHECK(a.b == b.b);
    CHECK(a.c == b.c);
    CHECK(a.d == b.d);
    CHECK(check_clifford(a).ok);
}
