#pragma once

#include <kakeya/raster.hpp>

namespace kakeya {

// Open or closed chain of vertices; a closed polyline has an implicit edge
// from the last vertex back to the first.
struct Polyline {
    std::vector<Point> vertices;
    bool closed = false;
};

// Total argument increment of the curve about p, in radians. For closed
// curves the value divided by 2 pi is the winding number.
double winding_number(const Polyline& gamma, Point p);

Polyline reversed(const Polyline& gamma);

// Concatenation (endpoints must chain); result is open unless `close` is set.
Polyline concatenated(const Polyline& first, const Polyline& second, bool close = false);

struct SeparationWitness {
    bool separated = false;
    double winding_a = 0.0;
    double winding_b = 0.0;
};

// Closes curve1 with the reversal of curve2 and compares winding numbers
// about a and b; a nonzero integer-turn difference certifies that a and b lie
// in different components of the complement.
SeparationWitness separation_witness(const Polyline& curve1, const Polyline& curve2, Point a,
                                     Point b);

// Coverage obstruction scenario: an obstacle inside a disc, a clear probe
// region, and a movement whose inverse drags the probe across.
struct ObstructionCase {
    Scene obstacle;
    Point disc_center;
    double disc_radius = 1.0;
    Scene probe;
    Movement movement;
    double t_end = 1.0;
};

struct ObstructionReport {
    bool hypothesis_met = false;   // probe and its pullback lie in distinct components
    bool covered = false;          // probe inside the swept obstacle (one-cell band)
    long probe_cells = 0;
    long uncovered_cells = 0;
    int32_t component_start = -1;
    int32_t component_end = -1;
    long component_count = 0;
};

// Labels the components of D \ A, tests whether G and M^{-1}_{t_end}(G) are
// separated, and if so verifies G within the swept obstacle. Pullback samples
// leaving the disc raise TrajectoryEscapeError.
ObstructionReport obstruction_coverage(const ObstructionCase& obstruction, const GridSpec& grid);

enum class ComponentClass {
    Singleton,
    SegmentLike,
    HalfLineFlag,
    LineFlag,
    CircularArc,
    Circle,
    Nontrivial,
};

std::string to_string(ComponentClass c);

struct Classification {
    ComponentClass kind = ComponentClass::Nontrivial;
    double line_residual = 0.0;
    double circle_residual = 0.0;
    Point circle_center;
    double circle_radius = 0.0;
    double max_angular_gap = 0.0;
};

// Least-squares line fit and algebraic circle fit; linear wins ties. Bounded
// samples cannot certify half lines or lines, so linear clouds report
// SegmentLike.
Classification classify_component(const std::vector<Point>& points, double tol);

} // namespace kakeya
