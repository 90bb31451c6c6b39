#pragma once

#include <kakeya/rigid_motion.hpp>

#include <random>

namespace kakeya::testing {

using Rng = std::mt19937_64;

inline Point random_point(Rng& rng, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    return Point(u(rng), u(rng));
}

inline RigidMotion random_motion(Rng& rng, double max_offset = 10.0) {
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    return RigidMotion(unit_from_angle(angle(rng)), random_point(rng, max_offset));
}

// Rotation part bounded away from the half turn, so elementary movements exist.
inline RigidMotion random_elementary_motion(Rng& rng, double max_offset = 10.0) {
    std::uniform_real_distribution<double> angle(-0.95 * M_PI, 0.95 * M_PI);
    return RigidMotion(unit_from_angle(angle(rng)), random_point(rng, max_offset));
}

} // namespace kakeya::testing
