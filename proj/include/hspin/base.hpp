#pragma once

#include <stdexcept>
#include <string>

namespace hspin {

// Mathematical precondition violated: invalid spinor, zero inverse,
// non-null basepoint, coincident centres, and the like.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed call: bad index, wrong JSON shape, unknown option value.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Global comparison tolerance. Comparisons are relative, scaled by
// max(1, |lhs|, |rhs|). Individual operations accept an explicit
// tolerance; passing a value <= 0 selects this global default.
double default_tolerance();
void set_default_tolerance(double tol);

// Returns tol if tol > 0, otherwise the global default.
double resolve_tolerance(double tol);

inline bool approx_equal(double x, double y, double tol) {
    double scale = 1.0;
    double ax = x < 0 ? -x : x;
    double ay = y < 0 ? -y : y;
    if (ax > scale) scale = ax;
    if (ay > scale) scale = ay;
    double diff = x - y;
    if (diff < 0) diff = -diff;
    return diff <= tol * scale;
}

}  // namespace hspin
