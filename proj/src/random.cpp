#include "hspin/random.hpp"

#include <cmath>

namespace hspin {

namespace {

Quaternion raw_quaternion(Rng& rng) {
    for (;;) {
        Quaternion q{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                     rng.uniform(-1, 1)};
        if (q.norm() >= 0.3) return q;
    }
}

Paravector raw_paravector(Rng& rng) {
    for (;;) {
        Paravector v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        if (v.norm() >= 0.3) return v;
    }
}

}  // namespace

Quaternion random_quaternion(Rng& rng) {
    return raw_quaternion(rng) * std::exp2(rng.uniform(-1.5, 1.5));
}

Quaternion random_unit_quaternion(Rng& rng) {
    Quaternion q = raw_quaternion(rng);
    return q / q.norm();
}

Paravector random_paravector(Rng& rng) {
    return raw_paravector(rng) * std::exp2(rng.uniform(-1.5, 1.5));
}

Paravector random_unit_paravector(Rng& rng) {
    Paravector v = raw_paravector(rng);
    return v * (1 / v.norm());
}

Spinor random_spinor(Rng& rng, double p_inf) {
    if (rng.uniform01() < p_inf) return {random_quaternion(rng), {}};
    Quaternion eta = random_quaternion(rng);
    return {random_paravector(rng).quat() * eta, eta};
}

Spinor random_spinor(std::uint64_t seed, double p_inf) {
    Rng rng(seed);
    return random_spinor(rng, p_inf);
}

CliffordMatrix random_clifford(Rng& rng, int length) {
    CliffordMatrix m = clifford_identity;
    for (int g = 0; g < length; ++g) {
        CliffordMatrix gen;
        switch (rng.integer(3)) {
            case 0: gen = {q_one, random_paravector(rng).quat(), {}, q_one}; break;
            case 1: gen = {{}, -q_one, q_one, {}}; break;
            default: {
                Quaternion a = random_quaternion(rng);
                gen = {a, {}, {}, conj_star(inverse(a))};
            }
        }
        m = compose(m, gen);
    }
    return m;
}

CliffordMatrix random_clifford(std::uint64_t seed, int length) {
    Rng rng(seed);
    return random_clifford(rng, length);
}

}  // namespace hspin
