#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hspin/base.hpp"

namespace hspin {

// One randomized identity check. Trial i draws its samples from
// Rng(seed + i), so worst_seed identifies a reproducible counterexample
// candidate: rerunning with --trials 1 --seed worst_seed replays it.
struct SuiteResult {
    std::string suite;
    int trials;
    double max_residual;
    std::uint64_t worst_seed;
    double tolerance;
    bool pass;
};

// Suites: ptolemy, antisym, holonomy, conformal, detmiracle, quasi,
// parabolic, fibres. Residuals are relative, scaled by the magnitudes
// involved. A negative tol selects the per-suite default; tol = 0 is
// taken literally (floating residuals are nonzero, so everything fails).
SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed,
                      double tol = -1.0);

const std::vector<std::string>& suite_names();

}  // namespace hspin
