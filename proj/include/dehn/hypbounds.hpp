#pragma once

// Hyperbolic Dehn-filling constants: normalized-length lower bounds, the core
// geodesic length bound, and the derived constants c and D. This is the one
// floating-point module (the constants are decimal literals; target relative
// error 1e-9); the systole sys(M) is an input, never computed here.

#include "dehn/arith.hpp"

namespace dehn {

/// Normalized length lower bound |q|/5 for a p/q filling slope.
double normalized_length_lower(const Int& q);

/// Core geodesic length bound 2*pi/(L^2 - 28.78); requires L >= 10.69.
double core_geodesic_bound(double normalized_length);

struct FillingConstants {
    double c;  // <= 0.0735, the short-geodesic cutoff
    double D;  // >= 10.69, the normalized-length threshold
};

/// c = min{0.0735, 0.5052*sys}, D = max{10.69, sqrt(2*pi/c + 28.78)}.
FillingConstants filling_constants(double sys);

/// 5*D: any |q| strictly above this is in the rigid filling regime.
double safe_q_threshold(double sys);

}  // namespace dehn
