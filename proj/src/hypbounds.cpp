#include "dehn/hypbounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dehn {

namespace {

constexpr double kCoreLengthCap = 0.0735;
constexpr double kSysFactor = 0.5052;
constexpr double kLengthThreshold = 10.69;
constexpr double kQuadraticDefect = 28.78;

}  // namespace

double normalized_length_lower(const Int& q) {
    return Int(abs(q)).get_d() / 5.0;
}

double core_geodesic_bound(double normalized_length) {
    if (normalized_length < kLengthThreshold) {
        throw std::domain_error("core_geodesic_bound: normalized length below the 10.69 regime");
    }
    return 2.0 * std::numbers::pi / (normalized_length * normalized_length - kQuadraticDefect);
}

FillingConstants filling_constants(double sys) {
    if (!(sys > 0)) throw std::domain_error("filling_constants: systole must be positive");
    double c = std::min(kCoreLengthCap, kSysFactor * sys);
    double D = std::max(kLengthThreshold, std::sqrt(2.0 * std::numbers::pi / c + kQuadraticDefect));
    return {c, D};
}

double safe_q_threshold(double sys) {
    return 5.0 * filling_constants(sys).D;
}

}  // namespace dehn
