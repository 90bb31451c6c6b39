#pragma once

#include <kakeya/movement.hpp>
#include <kakeya/raster.hpp>
#include <kakeya/scene.hpp>

#include <string>

namespace kakeya {

// Middle-interval Cantor construction at finite depth: after `depth` steps the
// set is 2^depth closed intervals of length (hi-lo) * ratio^depth.
struct CantorSpec {
    double lo = 0.0;
    double hi = 1.0;
    double ratio = 1.0 / 3.0; // in (0, 1/2)
    long depth = 0;

    std::vector<std::pair<double, double>> intervals() const;
    double total_length() const;
};

// One leg of a needle schedule: the scene is the needle at the stage start and
// the movement (M_0 = identity) carries it to the next pose.
struct ScheduleStage {
    Movement movement;
    Scene scene;
    std::string label;
    bool in_tree = false;      // rotation inside a Perron piece: measured as a union
    double path_length = 0.0;  // arc/slide length, for dilation-band accounting
};

struct NeedleSchedule {
    std::vector<ScheduleStage> stages;
    double total_area_budget = 0.0;
    SegmentPrim start_pose{Point(0, 0), Point(1, 0)};

    SegmentPrim end_pose() const;
    // Largest pose gap between consecutive stages.
    double pose_mismatch() const;
};

struct ScheduleMeasurement {
    double measured_area = 0.0;       // union of in-tree sweeps + sum of join sweeps
    double band_allowance = 0.0;      // 4 * cell * (path + needle length), per stage
    double tree_union_area = 0.0;
    long stage_count = 0;
};

// Rasterized measurement of a schedule. In-tree rotations share one grid (their
// overlap is the point of the Perron tree); joins are measured per stage in a
// frame aligned with their travel, with the cell coarsened on very long slides.
// When tree_mask_out is given, the shared in-tree union mask is copied there.
ScheduleMeasurement measure_schedule(const NeedleSchedule& schedule, double cell,
                                     RasterMask* tree_mask_out = nullptr);

// Slides a scene of segments parallel to `direction`; anything else raises
// NotParallelError. The swept set is one dilation band around the lines.
Movement trivial_parallel_mover(const Scene& scene, Point direction, double distance);

// Rotates a scene of arcs centered at `center`; anything else raises
// NotConcentricError. Angles of pi or more are split into elementary pieces.
Movement trivial_concentric_mover(const Scene& scene, Point center, double angle);

// Rotate-slide-rotate-slide transport of a segment to the parallel line at
// lateral_offset. The tilt angle eps / (2 (lateral_offset + length)^2) keeps
// the two rotation sectors within eps.
NeedleSchedule pal_join(double segment_length, double lateral_offset, double eps);

struct PerronPiece {
    std::vector<Point> vertices; // world-space triangle
    Point apex;
    Point base_mid;
    Point direction; // unit, apex -> base midpoint, same as in the base triangle
};

struct PerronTree {
    Scene scene;
    std::vector<PerronPiece> pieces;
    ConstructionReport report; // measured union area, base area, ratio
};

// Splits the base of the triangle into 2^k parts and merges the elementary
// triangles pairwise, translating the right sibling leftward by the shift that
// minimizes the union area (scanline-exact in x, sampled in y).
PerronTree perron_tree(long k, const Scene& base_triangle, double cell = 1e-3);

// Scanline area of the union for a shift-tuned tree on the canonical triangle,
// relative to the triangle area. Used to size needle constructions.
double perron_tree_area_ratio(long k);

struct NeedleReversal {
    NeedleSchedule schedule;
    ScheduleMeasurement measurement;
    ConstructionReport report;
    long tree_depth = 0;
    double needle_length = 0.0;
};

// Full reversal pipeline: three 60-degree Perron trees traversed piece by
// piece with parallel joins between consecutive pieces, then a return join to
// the reversed start pose. The needle length is sized from eps and the
// measured tree area so the rotation sweeps fit inside the budget.
NeedleReversal needle_reversal_schedule(double eps, double cell = 1e-3);

// The Hausdorff-dimension-2 witness A = {x>0, y in F, sqrt(x^2+y^2) in E} at
// finite Cantor depth, as a union of annulus-strip patches.
Scene dimension2_example(const CantorSpec& radial, const CantorSpec& vertical);

// Three-stage movement bringing A onto alpha(A): rotate about the origin to
// v*A, translate by c, rotate about c. Stage angles of pi or more split in two.
Movement dimension2_movement(const RigidMotion& alpha);

// The three covering sets B, v*{y in F}, B + c truncated to |x| <= extent.
Scene dimension2_covering(const CantorSpec& radial, const CantorSpec& vertical,
                          const RigidMotion& alpha, double extent);

} // namespace kakeya
