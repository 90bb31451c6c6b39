#include <kakeya/errors.hpp>
#include <kakeya/scene.hpp>

namespace kakeya {

namespace {

// Angle of p relative to angle0, normalized into [0, 2pi).
double relative_angle(const ArcPrim& arc, Point p) {
    const Point d = p - arc.center;
    double a = std::atan2(d.imag(), d.real()) - arc.angle0;
    a = std::fmod(a, 2.0 * M_PI);
    if (a < 0) a += 2.0 * M_PI;
    return a;
}

Point arc_point(const ArcPrim& arc, double angle_offset) {
    return arc.center + arc.radius * unit_from_angle(arc.angle0 + angle_offset);
}

} // namespace

std::vector<Point> rectangle_corners(const RectanglePrim& r) {
    const Point along = 0.5 * r.length * r.direction;
    const Point across = 0.5 * r.width * Point(-r.direction.imag(), r.direction.real());
    return {r.center - along - across, r.center + along - across, r.center + along + across,
            r.center - along + across};
}

Box bounding_box(const Primitive& prim) {
    Box box;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, SegmentPrim>) {
                box.expand(p.a);
                box.expand(p.b);
            } else if constexpr (std::is_same_v<T, PolygonPrim>) {
                for (Point v : p.vertices) box.expand(v);
            } else if constexpr (std::is_same_v<T, ArcPrim>) {
                box.expand(arc_point(p, 0.0));
                box.expand(arc_point(p, p.sweep));
                // Axis extremes reached inside the angular interval.
                for (int k = -4; k <= 8; ++k) {
                    const double axis = k * M_PI / 2.0;
                    const double off = axis - p.angle0;
                    if (off >= 0.0 && off <= p.sweep) box.expand(arc_point(p, off));
                }
            } else if constexpr (std::is_same_v<T, PointCloudPrim>) {
                for (Point v : p.points) box.expand(v);
            } else {
                for (Point v : rectangle_corners(p)) box.expand(v);
            }
        },
        prim);
    return box;
}

Box bounding_box(const Scene& scene) {
    Box box;
    for (const auto& p : scene.primitives) box.expand(bounding_box(p));
    return box;
}

bool point_in_polygon(const std::vector<Point>& vertices, Point p) {
    bool inside = false;
    const size_t n = vertices.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point a = vertices[j], b = vertices[i];
        if ((b.imag() > p.imag()) != (a.imag() > p.imag())) {
            const double x =
                b.real() + (p.imag() - b.imag()) * (a.real() - b.real()) / (a.imag() - b.imag());
            if (p.real() < x) inside = !inside;
        }
    }
    return inside;
}

double polygon_area(const std::vector<Point>& vertices) {
    double twice = 0.0;
    const size_t n = vertices.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) twice += cross(vertices[j], vertices[i]);
    return 0.5 * twice;
}

double distance_to(const Primitive& prim, Point p) {
    return std::visit(
        [&](const auto& prm) -> double {
            using T = std::decay_t<std::remove_cvref_t<decltype(prm)>>;
            if constexpr (std::is_same_v<T, SegmentPrim>) {
                return segment_distance(p, prm.a, prm.b);
            } else if constexpr (std::is_same_v<T, PolygonPrim>) {
                if (point_in_polygon(prm.vertices, p)) return 0.0;
                double best = std::numeric_limits<double>::infinity();
                const size_t n = prm.vertices.size();
                for (size_t i = 0, j = n - 1; i < n; j = i++)
                    best = std::min(best, segment_distance(p, prm.vertices[j], prm.vertices[i]));
                return best;
            } else if constexpr (std::is_same_v<T, ArcPrim>) {
                const double rho = std::abs(p - prm.center);
                if (rho == 0.0) return prm.radius;
                if (relative_angle(prm, p) <= prm.sweep) return std::abs(rho - prm.radius);
                return std::min(std::abs(p - arc_point(prm, 0.0)),
                                std::abs(p - arc_point(prm, prm.sweep)));
            } else if constexpr (std::is_same_v<T, PointCloudPrim>) {
                double best = std::numeric_limits<double>::infinity();
                for (Point q : prm.points) best = std::min(best, std::abs(p - q));
                return best;
            } else {
                const Point d = p - prm.center;
                const double x = std::abs(dot(d, prm.direction)) - 0.5 * prm.length;
                const double y = std::abs(cross(prm.direction, d)) - 0.5 * prm.width;
                if (x <= 0.0 && y <= 0.0) return 0.0;
                return std::hypot(std::max(x, 0.0), std::max(y, 0.0));
            }
        },
        prim);
}

double distance_to(const Scene& scene, Point p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& prm : scene.primitives) best = std::min(best, distance_to(prm, p));
    return best;
}

Primitive transformed(const Primitive& prim, const RigidMotion& m) {
    return std::visit(
        [&](const auto& prm) -> Primitive {
            using T = std::decay_t<std::remove_cvref_t<decltype(prm)>>;
            if constexpr (std::is_same_v<T, SegmentPrim>) {
                return SegmentPrim{m(prm.a), m(prm.b)};
            } else if constexpr (std::is_same_v<T, PolygonPrim>) {
                PolygonPrim out;
                out.vertices.reserve(prm.vertices.size());
                for (Point v : prm.vertices) out.vertices.push_back(m(v));
                return out;
            } else if constexpr (std::is_same_v<T, ArcPrim>) {
                ArcPrim out = prm;
                out.center = m(prm.center);
                out.angle0 = prm.angle0 + m.angle();
                return out;
            } else if constexpr (std::is_same_v<T, PointCloudPrim>) {
                PointCloudPrim out;
                out.points.reserve(prm.points.size());
                for (Point v : prm.points) out.points.push_back(m(v));
                return out;
            } else {
                RectanglePrim out = prm;
                out.center = m(prm.center);
                out.direction = m.u() * prm.direction;
                return out;
            }
        },
        prim);
}

Scene transformed(const Scene& scene, const RigidMotion& m) {
    Scene out;
    out.primitives.reserve(scene.primitives.size());
    for (const auto& prm : scene.primitives) out.primitives.push_back(transformed(prm, m));
    return out;
}

double max_radius_about_origin(const Scene& scene) {
    const Box box = bounding_box(scene);
    if (box.empty()) return 0.0;
    double best = 0.0;
    for (double x : {box.xmin, box.xmax})
        for (double y : {box.ymin, box.ymax}) best = std::max(best, std::hypot(x, y));
    return best;
}

} // namespace kakeya
