#pragma once

#include <cstdint>
#include <random>

#include "hspin/clifford.hpp"

namespace hspin {

// Deterministic sampler. The engine is std::mt19937_64 (fully specified by
// the standard) and doubles are produced by the explicit mapping
// (x >> 11) * 2^-53 into [0, 1), so a seed pins the exact sample sequence
// on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    std::uint64_t integer(std::uint64_t bound) { return eng_() % bound; }

  private:
    std::mt19937_64 eng_;
};

// Components uniform in [-1, 1], resampled until |q| >= 0.3, then scaled
// by 2^u with u uniform in [-1.5, 1.5] to vary magnitudes.
Quaternion random_quaternion(Rng& rng);

Quaternion random_unit_quaternion(Rng& rng);

Paravector random_paravector(Rng& rng);
Paravector random_unit_paravector(Rng& rng);

// Spinor sampler: v a random paravector and eta a random quaternion give
// (v eta, eta), which satisfies the spinor condition by construction.
// With probability p_inf the eta component is zero instead (a spinor
// centred at infinity).
Spinor random_spinor(Rng& rng, double p_inf = 0.05);
Spinor random_spinor(std::uint64_t seed, double p_inf = 0.05);

// Product of `length` random generators of SL(2, H_para): translations
// [[1, v], [0, 1]], the inversion [[0, -1], [1, 0]], and diagonals
// [[a, 0], [0, (a^-1)*]].
CliffordMatrix random_clifford(Rng& rng, int length);
CliffordMatrix random_clifford(std::uint64_t seed, int length);

}  // namespace hspin
