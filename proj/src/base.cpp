#include "hspin/base.hpp"

namespace hspin {

namespace {
double g_tolerance = 1e-9;
}

double default_tolerance() { return g_tolerance; }

void set_default_tolerance(double tol) {
    if (!(tol > 0))
        throw ArgumentError("tolerance must be positive");
    g_tolerance = tol;
}

double resolve_tolerance(double tol) { return tol > 0 ? tol : g_tolerance; }

}  // namespace hspin
