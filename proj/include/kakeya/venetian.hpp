#pragma once

#include <kakeya/movement.hpp>
#include <kakeya/raster.hpp>
#include <kakeya/scene.hpp>

namespace kakeya {

// Finite stage of the venetian-blind construction: a union of narrow
// rectangles sharing the generation direction e_n.
struct RectangleSystem {
    long generation = 1;
    Point direction{1.0, 0.0};       // e_n
    Point limit_direction{1.0, 0.0}; // e
    std::vector<RectanglePrim> rectangles;

    Scene scene() const;
};

struct BlindParams {
    Point limit_direction{1.0, 0.0};
    std::vector<Point> directions;  // e_1, e_2, ... distinct, converging to e
    std::vector<long> slat_counts;  // per refinement step
    std::vector<double> widths;     // strictly decreasing, widths[0] < 1
    double initial_length = 0.57;
};

// Directions at angle 1/n from e, widths tuned so four refinements keep the
// current-direction shadow below 1/n.
BlindParams default_blind_params(long generations);

void validate(const BlindParams& params);

// Generation-1 system: one closed rectangle in direction e_1 of width < 1.
RectangleSystem init_blind(const BlindParams& params);

// Replaces every parent by `slats` thin child rectangles in next_direction,
// contained in the parent, centers on the parent axis at equal spacing. The
// children are sized to span (almost) the whole parent axis so earlier
// projections and distance sets survive.
RectangleSystem refine(const RectangleSystem& sys, Point next_direction, long slats,
                       double width);

// 1-D measure of the orthogonal projection of the union onto the line
// orthogonal to `direction` (exact interval union of rectangle shadows).
double projection_measure(const RectangleSystem& sys, Point direction);

// 1-D measure of { |x - p| : x in the union }; each rectangle contributes the
// exact interval [min distance, max distance].
double distance_set_measure(const RectangleSystem& sys, Point p);

struct BlindMoverResult {
    Movement movement;
    ConstructionReport report;
};

// Translation by R * e; the swept area is measured in a frame where e is the
// x-axis and compared against shadow * R + caps + band.
BlindMoverResult blind_mover(const RectangleSystem& sys, double R, double cell = 1e-3);

// True when every child rectangle has all corners inside its parent (used by
// the nesting invariant tests).
bool rectangle_contains(const RectanglePrim& outer, const RectanglePrim& inner, double tol = 1e-9);

} // namespace kakeya
