#pragma once

#include <kakeya/rigid_motion.hpp>

#include <variant>
#include <vector>

namespace kakeya {

// Curve primitive: the segment [a, b].
struct SegmentPrim {
    Point a;
    Point b;
};

// Filled simple polygon, vertices in order (implicit closing edge).
struct PolygonPrim {
    std::vector<Point> vertices;
};

// Circular arc of positive radius: angles angle0 .. angle0 + sweep, sweep in (0, 2pi].
struct ArcPrim {
    Point center;
    double radius = 1.0;
    double angle0 = 0.0;
    double sweep = 2.0 * M_PI;
};

struct PointCloudPrim {
    std::vector<Point> points;
};

// Filled oriented rectangle: `length` along the unit vector `direction`,
// `width` across it.
struct RectanglePrim {
    Point center;
    Point direction{1.0, 0.0};
    double length = 1.0;
    double width = 1.0;
};

using Primitive =
    std::variant<SegmentPrim, PolygonPrim, ArcPrim, PointCloudPrim, RectanglePrim>;

// A planar set represented as a list of primitives.
struct Scene {
    std::vector<Primitive> primitives;

    Scene() = default;
    explicit Scene(Primitive p) { primitives.push_back(std::move(p)); }
    explicit Scene(std::vector<Primitive> prims) : primitives(std::move(prims)) {}

    void add(Primitive p) { primitives.push_back(std::move(p)); }
    bool empty() const { return primitives.empty(); }
};

Box bounding_box(const Primitive& prim);
Box bounding_box(const Scene& scene);

// Distance from a point to the primitive as a point set (0 inside filled ones).
double distance_to(const Primitive& prim, Point p);
double distance_to(const Scene& scene, Point p);

Primitive transformed(const Primitive& prim, const RigidMotion& m);
Scene transformed(const Scene& scene, const RigidMotion& m);

// Corners of the rectangle in CCW order.
std::vector<Point> rectangle_corners(const RectanglePrim& r);

// Largest |x| over the primitive's defining points (conservative for arcs).
double max_radius_about_origin(const Scene& scene);

// Exact signed area of a simple polygon (positive when CCW).
double polygon_area(const std::vector<Point>& vertices);

bool point_in_polygon(const std::vector<Point>& vertices, Point p);

} // namespace kakeya
