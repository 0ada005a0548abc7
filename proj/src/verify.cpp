#include "hspin/verify.hpp"

#include <algorithm>
#include <cmath>

#include "hspin/lambda.hpp"
#include "hspin/quasiplucker.hpp"
#include "hspin/random.hpp"

namespace hspin {

namespace {

double rel(double got, double want) {
    return std::abs(got - want) / (1 + std::abs(got) + std::abs(want));
}

// resample until the new spinor's bracket against every earlier one is
// bounded away from zero, so the drawn configuration is nondegenerate
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

double trial_ptolemy(Rng& rng) {
    Spinor ks[4];
    draw_distinct(rng, ks, 4, 0.05);
    return ptolemy_residual(ks[0], ks[1], ks[2], ks[3]).norm();
}

double trial_antisym(Rng& rng) {
    Spinor k1 = random_spinor(rng);
    Spinor k2 = random_spinor(rng);
    Quaternion sum = bracket(k1, k2) + conj_star(bracket(k2, k1));
    return sum.norm() / (1 + k1.norm() * k2.norm());
}

double trial_holonomy(Rng& rng) {
    Spinor ks[3];
    draw_distinct(rng, ks, 3, 0.05);
    Holonomy h = triangle_holonomy(ks[0], ks[1], ks[2]);
    return std::abs(h.value.d) / (1 + h.value.norm());
}

double trial_conformal(Rng& rng) {
    Spinor k = random_spinor(rng);
    Paravector v = random_paravector(rng);
    Paravector w = random_paravector(rng);
    Spinor sv = section_s(v, k);
    Spinor sw = section_s(w, k);
    MinkowskiPoint dv = dphi1(k, sv.xi, sv.eta);
    MinkowskiPoint dw = dphi1(k, sw.xi, sw.eta);
    double n4 = k.norm2() * k.norm2();
    return rel(minkowski_inner(dv, dw), -4 * n4 * para_dot_cross(v, w).dot);
}

double trial_detmiracle(Rng& rng) {
    Spinor k = random_spinor(rng);
    Paravector v = random_paravector(rng);
    Spinor sv = section_s(v, k);
    HermitianMatrix h = point_to_hermitian(dphi1(k, sv.xi, sv.eta));
    double det = h.m11.a * h.m22.a - (h.m12 * h.m21).a;
    return rel(det, -v.norm2() * k.norm2() * k.norm2());
}

double trial_quasi(Rng& rng) {
    Spinor ks[4];
    draw_distinct(rng, ks, 4, 0.05);
    SpinorQuad q{ks[0], ks[1], ks[2], ks[3]};
    int p[4] = {0, 1, 2, 3};
    for (int i = 3; i > 0; --i)
        std::swap(p[i], p[rng.integer(static_cast<std::uint64_t>(i) + 1)]);
    return std::max(gr_skew_symmetry_residual(q, p[0], p[1], p[2]).norm(),
                    gr_plucker_residual(q, p[0], p[1], p[2], p[3]).norm());
}

double entry_scale(const CliffordMatrix& m) {
    return 1 + std::max({m.a.norm(), m.b.norm(), m.c.norm(), m.d.norm()});
}

double trial_parabolic(Rng& rng) {
    Spinor k = random_spinor(rng);
    CliffordMatrix b = random_clifford(rng, 3);
    CliffordMatrix m = compose(compose(b, parabolic_from_spinor(k)), inverse(b));
    ParabolicCheck pc = is_parabolic(m);
    double s = entry_scale(m);
    double r = std::max({pc.sq_residual, pc.trace_residual / s, pc.offdiag_residual / s});
    if (!pc.parabolic) r = std::max(r, 1.0);

    Quaternion a = random_unit_quaternion(rng) * rng.uniform(1.25, 2.5);
    CliffordMatrix d{a, {}, {}, conj_star(inverse(a))};
    CliffordMatrix n = compose(compose(b, d), inverse(b));
    if (is_parabolic(n).parabolic) r = std::max(r, 1.0);
    return r;
}

double trial_fibres(Rng& rng) {
    Spinor k = random_spinor(rng);
    Quaternion alpha = random_unit_quaternion(rng);
    MinkowskiPoint p = phi1(k);
    MinkowskiPoint q = phi1(k * alpha);
    return (q - p).euclidean_norm() / (1 + p.euclidean_norm());
}

struct SuiteDef {
    const char* name;
    double default_tol;
    double (*trial)(Rng&);
};

constexpr SuiteDef kSuites[] = {
    {"ptolemy", 1e-8, trial_ptolemy},
    {"antisym", 1e-12, trial_antisym},
    {"holonomy", 1e-9, trial_holonomy},
    {"conformal", 1e-8, trial_conformal},
    {"detmiracle", 1e-8, trial_detmiracle},
    {"quasi", 1e-8, trial_quasi},
    {"parabolic", 1e-8, trial_parabolic},
    {"fibres", 1e-10, trial_fibres},
};

}  // namespace

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed, double tol) {
    const SuiteDef* def = nullptr;
    for (const SuiteDef& s : kSuites)
        if (name == s.name) def = &s;
    if (!def) throw ArgumentError("unknown suite: " + name);
    if (trials < 1) throw ArgumentError("trials must be positive");

    SuiteResult r;
    r.suite = name;
    r.trials = trials;
    r.max_residual = 0;
    r.worst_seed = seed;
    r.tolerance = tol < 0 ? def->default_tol : tol;
    for (int i = 0; i < trials; ++i) {
        Rng rng(seed + static_cast<std::uint64_t>(i));
        double res = def->trial(rng);
        if (res > r.max_residual) {
            r.max_residual = res;
            r.worst_seed = seed + static_cast<std::uint64_t>(i);
        }
    }
    r.pass = r.max_residual <= r.tolerance;
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const SuiteDef& s : kSuites) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

}  // namespace hspin
