// Acceptance gate: one line per criterion, exit 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "hspin/lambda.hpp"
#include "hspin/quasiplucker.hpp"
#include "hspin/random.hpp"

using namespace hspin;

namespace {

int failures = 0;

void report(const char* name, bool ok) {
    std::printf("%s  %s\n", ok ? "PASS" : "FAIL", name);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void draw_distinct(Rng& rng, Spinor* ks, int count, double p_inf) {
    for (int i = 0; i < count; ++i) {
        for (;;) {
            Spinor k = random_spinor(rng, p_inf);
            bool ok = true;
            for (int j = 0; j < i; ++j)
                if (bracket(ks[j], k).norm() <= 1e-2) {
                    ok = false;
                    break;
                }
            if (ok) {
                ks[i] = k;
                break;
            }
        }
    }
}

double rel(double got, double want) {
    return std::abs(got - want) / (1 + std::abs(got) + std::abs(want));
}

void criterion_lambda_pdet() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        Rng rng(10000 + i);
        Spinor ks[2];
        draw_distinct(rng, ks, 2, 0.05);
        Quaternion lp = lambda_pdet(ks[0], ks[1]);
        Quaternion lg = lambda_geometric(ks[0], ks[1]);
        double r = std::min((lp - lg).norm(), (lp + lg).norm());
        if (r > 1e-6 * lp.norm()) ok = false;
    }
    Quaternion one = lambda_geometric({q_one, {}}, {{}, q_one});
    if ((one - q_one).norm() > 1e-12) ok = false;
    if ((lambda_pdet({q_one, {}}, {{}, q_one}) - q_one).norm() > 1e-12) ok = false;
    for (int i = 0; i < 100; ++i) {
        Rng rng(20000 + i);
        Quaternion d = random_quaternion(rng);
        double scale = 1 + d.norm();
        Quaternion lp = lambda_pdet({q_one, {}}, {{}, d});
        Quaternion lg = lambda_geometric({q_one, {}}, {{}, d});
        if ((lp - d).norm() > 1e-12 * scale) ok = false;
        if (std::min((lg - d).norm(), (lg + d).norm()) > 1e-12 * scale) ok = false;
    }
    if (seconds_since(t0) > 5.0) ok = false;
    report("lambda length equals pseudo-determinant up to sign", ok);
}

void criterion_ptolemy() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        Rng rng(30000 + i);
        Spinor ks[4];
        draw_distinct(rng, ks, 4, 0.05);
        if (ptolemy_residual(ks[0], ks[1], ks[2], ks[3]).norm() > 1e-8) ok = false;
    }
    Quaternion inst = ptolemy_residual({q_one, {}}, {{}, q_one}, {q_one, q_one},
                                       {q_one, -q_one});
    if (inst.norm() > 1e-14) ok = false;
    if (seconds_since(t0) > 2.0) ok = false;
    report("noncommutative Ptolemy equation on ideal tetrahedra", ok);
}

void criterion_antisymmetry() {
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        Rng rng(40000 + i);
        Spinor k1 = random_spinor(rng);
        Spinor k2 = random_spinor(rng);
        Quaternion sum = bracket(k1, k2) + conj_star(bracket(k2, k1));
        if (sum.norm() > 1e-12 * (1 + k1.norm() * k2.norm())) ok = false;
    }
    report("lambda antisymmetry l12 + star(l21) = 0", ok);
}

void criterion_holonomy() {
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        Rng rng(50000 + i);
        Spinor ks[3];
        draw_distinct(rng, ks, 3, 0.05);
        Holonomy h = triangle_holonomy(ks[0], ks[1], ks[2]);
        if (h.inf || std::abs(h.value.d) > 1e-9 * (1 + h.value.norm())) ok = false;
    }
    Holonomy a = triangle_holonomy({q_one, {}}, {{}, q_one}, {q_one, q_one});
    Holonomy b = triangle_holonomy({q_one, {}}, {{}, q_one}, {q_i, q_one});
    if (a.inf || (a.value - -q_one).norm() > 1e-14) ok = false;
    if (b.inf || (b.value - q_i).norm() > 1e-14) ok = false;
    report("triangle holonomy lands in the paravectors", ok);
}

void criterion_conformality() {
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        Rng rng(60000 + i);
        Spinor k = random_spinor(rng);
        Paravector v = random_paravector(rng);
        Paravector w = random_paravector(rng);
        Spinor sv = section_s(v, k);
        Spinor sw = section_s(w, k);
        MinkowskiPoint dv = dphi1(k, sv.xi, sv.eta);
        MinkowskiPoint dw = dphi1(k, sw.xi, sw.eta);
        double n4 = k.norm2() * k.norm2();
        if (rel(minkowski_inner(dv, dw), -4 * n4 * para_dot_cross(v, w).dot) > 1e-8)
            ok = false;
        HermitianMatrix h = point_to_hermitian(dv);
        double det = h.m11.a * h.m22.a - (h.m12 * h.m21).a;
        if (rel(det, -v.norm2() * n4) > 1e-8) ok = false;
    }
    report("conformality factor -4|k|^4 and determinant -|v|^2 |k|^4", ok);
}

void criterion_bracket_invariance() {
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        Rng rng(70000 + i);
        Spinor k1 = random_spinor(rng, 0.05);
        Spinor k2 = random_spinor(rng, 0.05);
        CliffordMatrix a = random_clifford(rng, 3);
        Quaternion before = bracket(k1, k2);
        Quaternion after = bracket(act_spinor(a, k1), act_spinor(a, k2));
        if ((after - before).norm() > 1e-8 * (1 + before.norm())) ok = false;
    }
    report("bracket invariance under the SL(2, H_para) action", ok);
}

void criterion_parabolic() {
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
        Rng rng(80000 + i);
        Spinor k = random_spinor(rng, 0.05);
        CliffordMatrix b = random_clifford(rng, 3);
        CliffordMatrix m = compose(compose(b, parabolic_from_spinor(k)), inverse(b));
        ParabolicCheck pc = is_parabolic(m);
        double s = 1 + std::max({m.a.norm(), m.b.norm(), m.c.norm(), m.d.norm()});
        if (!pc.parabolic || pc.trace_residual > 1e-8 * s ||
            pc.offdiag_residual > 1e-8 * s)
            ok = false;
    }
    for (int i = 0; i < 200; ++i) {
        Rng rng(90000 + i);
        Quaternion a = random_unit_quaternion(rng) * rng.uniform(1.25, 2.5);
        CliffordMatrix b = random_clifford(rng, 3);
        CliffordMatrix n =
            compose(compose(b, CliffordMatrix{a, {}, {}, conj_star(inverse(a))}),
                    inverse(b));
        if (is_parabolic(n).parabolic) ok = false;
    }
    report("parabolic classification of conjugated translations", ok);
}

void criterion_fibres() {
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        Rng rng(100000 + i);
        Spinor k = random_spinor(rng, 0.05);
        Quaternion alpha = random_unit_quaternion(rng);
        MinkowskiPoint p = phi1(k);
        MinkowskiPoint q = phi1(k * alpha);
        if ((q - p).euclidean_norm() > 1e-10 * (1 + p.euclidean_norm())) ok = false;
    }
    report("phi1 constant on unit right rotations of a spinor", ok);
}

void criterion_decoration_roundtrip() {
    bool ok = true;
    for (int i = 0; i < 500; ++i) {
        Rng rng(110000 + i);
        Multiflag mf = multiflag_from_spinor(random_spinor(rng, 0.05));
        Multiflag back = ideal_decoration_to_multiflag(multiflag_to_ideal_decoration(mf));
        if (!flags_equal({mf.p, mf.vi}, {back.p, back.vi}) ||
            !flags_equal({mf.p, mf.vj}, {back.p, back.vj}))
            ok = false;
    }
    DecoratedIdealPoint anchor =
        multiflag_to_ideal_decoration(multiflag_from_spinor({q_one, {}}));
    MinkowskiPoint want{0, 0, 2, 0, 0};
    if (!(anchor.psii.T == want.T && anchor.psii.W == want.W && anchor.psii.X == want.X &&
          anchor.psii.Y == want.Y && anchor.psii.Z == want.Z))
        ok = false;
    report("multiflag to decorated ideal point roundtrip", ok);
}

void criterion_horosphere_centre() {
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        Rng rng(120000 + i);
        Spinor k = random_spinor(rng, 0.05);
        ExtendedParavector got = boundary_to_uhs(phi1(k));
        if (k.eta.norm2() == 0) {
            if (!got.inf) ok = false;
        } else {
            Paravector want = to_paravector(k.xi * inverse(k.eta), 1e-6);
            if (got.inf || (got.v - want).norm() > 1e-9 * (1 + want.norm())) ok = false;
        }
    }
    ExtendedParavector at_inf = boundary_to_uhs(phi1({q_one, {}}));
    ExtendedParavector at_zero = boundary_to_uhs(phi1({{}, q_one}));
    if (!at_inf.inf) ok = false;
    if (at_zero.inf || !(at_zero.v == Paravector{0, 0, 0})) ok = false;
    report("boundary point of phi1 maps to the centre xi eta^-1", ok);
}

void criterion_quasi_plucker() {
    bool ok = true;
    for (int i = 0; i < 500; ++i) {
        Rng rng(130000 + i);
        Spinor ks[4];
        draw_distinct(rng, ks, 4, 0.0);
        SpinorQuad q{ks[0], ks[1], ks[2], ks[3]};
        int p[4] = {0, 1, 2, 3};
        for (int m = 3; m > 0; --m)
            std::swap(p[m], p[rng.integer(static_cast<std::uint64_t>(m) + 1)]);

        Quaternion c1 = quasi_plucker(q, p[0], p[1], p[2], 1);
        Quaternion c2 = quasi_plucker(q, p[0], p[1], p[2], 2);
        if ((c1 - c2).norm() > 1e-8 * (1 + c1.norm())) ok = false;

        Mat2 a{{{ks[0].xi, ks[1].xi}, {ks[0].eta, ks[1].eta}}};
        Quaternion br = bracket(ks[0], ks[1]);
        Quaternion want11 = conj_star(inverse(ks[1].eta)) * conj_star(br);
        Quaternion want12 = -(conj_star(inverse(ks[0].eta)) * br);
        Quaternion want21 = -(conj_star(inverse(ks[1].xi)) * conj_star(br));
        Quaternion want22 = conj_star(inverse(ks[0].xi)) * br;
        double scale = 1 + br.norm();
        if ((quasidet_2x2(a, 1, 1) - want11).norm() > 1e-8 * scale) ok = false;
        if ((quasidet_2x2(a, 1, 2) - want12).norm() > 1e-8 * scale) ok = false;
        if ((quasidet_2x2(a, 2, 1) - want21).norm() > 1e-8 * scale) ok = false;
        if ((quasidet_2x2(a, 2, 2) - want22).norm() > 1e-8 * scale) ok = false;

        if (gr_skew_symmetry_residual(q, p[0], p[1], p[2]).norm() > 1e-8) ok = false;
        if (gr_plucker_residual(q, p[0], p[1], p[2], p[3]).norm() > 1e-8) ok = false;

        Quaternion viaq = gr_plucker_residual(q, 2, 1, 0, 3);
        Quaternion viap = ptolemy_residual(ks[0], ks[1], ks[2], ks[3]);
        if ((viaq - viap).norm() > 1e-10) ok = false;
    }
    report("quasi-Pluecker identities and Ptolemy cross-check", ok);
}

}  // namespace

int main() {
    criterion_lambda_pdet();
    criterion_ptolemy();
    criterion_antisymmetry();
    criterion_holonomy();
    criterion_conformality();
    criterion_bracket_invariance();
    criterion_parabolic();
    criterion_fibres();
    criterion_decoration_roundtrip();
    criterion_horosphere_centre();
    criterion_quasi_plucker();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
