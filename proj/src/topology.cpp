#include <kakeya/errors.hpp>
#include <kakeya/topology.hpp>

#include <array>

namespace kakeya {

namespace {

constexpr double kOnCurveTol = 1e-12;

std::vector<std::pair<Point, Point>> edges_of(const Polyline& gamma) {
    std::vector<std::pair<Point, Point>> edges;
    const size_t n = gamma.vertices.size();
    for (size_t i = 0; i + 1 < n; ++i) edges.push_back({gamma.vertices[i], gamma.vertices[i + 1]});
    if (gamma.closed && n >= 2) edges.push_back({gamma.vertices.back(), gamma.vertices.front()});
    return edges;
}

// Deterministic sample points of every primitive, for coarse containment tests.
std::vector<Point> sample_points(const Scene& scene, long per_primitive) {
    std::vector<Point> pts;
    for (const auto& prim : scene.primitives) {
        if (const auto* seg = std::get_if<SegmentPrim>(&prim)) {
            for (long i = 0; i <= per_primitive; ++i)
                pts.push_back(seg->a + (double(i) / double(per_primitive)) * (seg->b - seg->a));
        } else if (const auto* poly = std::get_if<PolygonPrim>(&prim)) {
            for (Point v : poly->vertices) pts.push_back(v);
            const size_t n = poly->vertices.size();
            for (size_t i = 0; i < n; ++i)
                pts.push_back(0.5 * (poly->vertices[i] + poly->vertices[(i + 1) % n]));
        } else if (const auto* arc = std::get_if<ArcPrim>(&prim)) {
            for (long i = 0; i <= per_primitive; ++i) {
                const double a = arc->angle0 + arc->sweep * double(i) / double(per_primitive);
                pts.push_back(arc->center + arc->radius * unit_from_angle(a));
            }
        } else if (const auto* cloud = std::get_if<PointCloudPrim>(&prim)) {
            for (Point p : cloud->points) pts.push_back(p);
        } else if (const auto* rect = std::get_if<RectanglePrim>(&prim)) {
            for (Point p : rectangle_corners(*rect)) pts.push_back(p);
            pts.push_back(rect->center);
        }
    }
    return pts;
}

} // namespace

double winding_number(const Polyline& gamma, Point p) {
    if (gamma.vertices.size() < 2)
        throw InvalidArgumentError("polyline needs at least two vertices");
    double total = 0.0;
    for (const auto& [a, b] : edges_of(gamma)) {
        if (segment_distance(p, a, b) <= kOnCurveTol)
            throw PointOnCurveError("reference point lies on the curve");
        const Point u = a - p;
        const Point v = b - p;
        total += std::atan2(cross(u, v), dot(u, v));
    }
    return total;
}

Polyline reversed(const Polyline& gamma) {
    Polyline out = gamma;
    std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

Polyline concatenated(const Polyline& first, const Polyline& second, bool close) {
    if (first.closed || second.closed)
        throw InvalidArgumentError("only open polylines can be concatenated");
    if (first.vertices.empty() || second.vertices.empty())
        throw InvalidArgumentError("cannot concatenate empty polylines");
    if (std::abs(first.vertices.back() - second.vertices.front()) > 1e-12)
        throw InvalidArgumentError("polyline endpoints do not chain");
    Polyline out;
    out.vertices = first.vertices;
    out.vertices.insert(out.vertices.end(), second.vertices.begin() + 1, second.vertices.end());
    out.closed = close;
    return out;
}

SeparationWitness separation_witness(const Polyline& curve1, const Polyline& curve2, Point a,
                                     Point b) {
    const Polyline loop = concatenated(curve1, reversed(curve2), /*close=*/true);
    SeparationWitness w;
    w.winding_a = winding_number(loop, a);
    w.winding_b = winding_number(loop, b);
    w.separated = std::abs(w.winding_a - w.winding_b) >= M_PI;
    return w;
}

ObstructionReport obstruction_coverage(const ObstructionCase& obstruction, const GridSpec& grid) {
    const RasterMask domain = disc_mask(grid, obstruction.disc_center, obstruction.disc_radius);
    const RasterMask obstacle_mask = rasterize(obstruction.obstacle, grid);
    const ComponentLabeling labels = connected_components(domain, obstacle_mask);

    // Pullback trajectory containment: M^{-1}_s(G) must stay inside D.
    const auto probe_pts = sample_points(obstruction.probe, 32);
    long steps = 64;
    {
        const double rmax = max_radius_about_origin(obstruction.probe);
        for (int iter = 0; iter < 20; ++iter) {
            double worst = 0.0;
            RigidMotion prev = inverse(obstruction.movement.at(0.0));
            for (long i = 1; i <= steps; ++i) {
                const double s = obstruction.t_end * double(i) / double(steps);
                const RigidMotion cur = inverse(obstruction.movement.at(s));
                worst = std::max(worst, std::abs(cur.u() - prev.u()) * rmax +
                                            std::abs(cur.c() - prev.c()));
                prev = cur;
            }
            if (worst <= grid.cell) break;
            steps *= 2;
        }
    }
    for (long i = 0; i <= steps; ++i) {
        const double s = obstruction.t_end * double(i) / double(steps);
        const RigidMotion pull = inverse(obstruction.movement.at(s));
        for (Point x : probe_pts)
            if (std::abs(pull(x) - obstruction.disc_center) >
                obstruction.disc_radius + grid.cell)
                throw TrajectoryEscapeError("pullback of the probe leaves the disc at s = " +
                                            std::to_string(s));
    }

    auto region_label = [&](const RasterMask& m) -> int32_t {
        int32_t found = -1;
        for (long row = 0; row < m.rows(); ++row) {
            for (long col = 0; col < m.cols(); ++col) {
                if (!m.get(row, col)) continue;
                const int32_t l = labels.label_at(row, col);
                if (l < 0) continue; // dilation fringe touching the obstacle/disc edge
                if (found < 0) found = l;
                else if (found != l) return -2; // straddles components
            }
        }
        return found;
    };

    ObstructionReport report;
    report.component_count = labels.count;

    const RasterMask probe_mask = rasterize(obstruction.probe, grid);
    report.probe_cells = probe_mask.count();
    const RigidMotion pullback_end = inverse(obstruction.movement.at(obstruction.t_end));
    const RasterMask probe_end_mask =
        rasterize(transformed(obstruction.probe, pullback_end), grid);

    report.component_start = region_label(probe_mask);
    report.component_end = region_label(probe_end_mask);
    report.hypothesis_met = report.component_start >= 0 && report.component_end >= 0 &&
                            report.component_start != report.component_end;
    if (!report.hypothesis_met) return report;

    const Movement window = obstruction.t_end >= 1.0
                                ? obstruction.movement
                                : Movement::restriction(obstruction.movement, 0.0, obstruction.t_end);
    const RasterMask swept = sweep(window, obstruction.obstacle, 2, grid);
    report.uncovered_cells = probe_mask.uncovered_count(swept, 1);
    report.covered = report.uncovered_cells == 0;
    return report;
}

std::string to_string(ComponentClass c) {
    switch (c) {
        case ComponentClass::Singleton: return "singleton";
        case ComponentClass::SegmentLike: return "segment";
        case ComponentClass::HalfLineFlag: return "halfline";
        case ComponentClass::LineFlag: return "line";
        case ComponentClass::CircularArc: return "arc";
        case ComponentClass::Circle: return "circle";
        case ComponentClass::Nontrivial: return "nontrivial";
    }
    return "unknown";
}

Classification classify_component(const std::vector<Point>& points, double tol) {
    if (points.empty()) throw InvalidArgumentError("classify_component needs sample points");
    Classification out;

    Point mean(0.0, 0.0);
    for (Point p : points) mean += p;
    mean /= double(points.size());

    double diameter = 0.0;
    Box box;
    for (Point p : points) box.expand(p);
    diameter = std::hypot(box.width(), box.height());
    if (diameter <= tol) {
        out.kind = ComponentClass::Singleton;
        return out;
    }

    // Principal direction of the covariance; residual = max orthogonal deviation.
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (Point p : points) {
        const Point d = p - mean;
        sxx += d.real() * d.real();
        sxy += d.real() * d.imag();
        syy += d.imag() * d.imag();
    }
    const double tr = sxx + syy;
    const double det = sxx * syy - sxy * sxy;
    const double lam = 0.5 * tr + std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
    Point dir = std::abs(sxy) > 1e-30 ? Point(lam - syy, sxy) : (sxx >= syy ? Point(1, 0) : Point(0, 1));
    dir /= std::abs(dir);
    for (Point p : points)
        out.line_residual = std::max(out.line_residual, std::abs(cross(dir, p - mean)));

    if (out.line_residual <= tol) {
        out.kind = ComponentClass::SegmentLike;
        return out;
    }

    // Kasa circle fit: minimize sum (|p|^2 + D x + E y + F)^2 over D, E, F.
    double a11 = 0, a12 = 0, a13 = 0, a22 = 0, a23 = 0, a33 = double(points.size());
    double b1 = 0, b2 = 0, b3 = 0;
    for (Point p : points) {
        const double x = p.real() - mean.real(), y = p.imag() - mean.imag();
        const double z = x * x + y * y;
        a11 += x * x;
        a12 += x * y;
        a13 += x;
        a22 += y * y;
        a23 += y;
        b1 -= z * x;
        b2 -= z * y;
        b3 -= z;
    }
    // Solve the symmetric 3x3 system by Cramer's rule.
    const double det3 = a11 * (a22 * a33 - a23 * a23) - a12 * (a12 * a33 - a23 * a13) +
                        a13 * (a12 * a23 - a22 * a13);
    if (std::abs(det3) > 1e-30) {
        const double d1 = b1 * (a22 * a33 - a23 * a23) - a12 * (b2 * a33 - a23 * b3) +
                          a13 * (b2 * a23 - a22 * b3);
        const double d2 = a11 * (b2 * a33 - a23 * b3) - b1 * (a12 * a33 - a23 * a13) +
                          a13 * (a12 * b3 - b2 * a13);
        const double d3 = a11 * (a22 * b3 - b2 * a23) - a12 * (a12 * b3 - b2 * a13) +
                          b1 * (a12 * a23 - a22 * a13);
        const double D = d1 / det3, E = d2 / det3, F = d3 / det3;
        const Point center = mean + Point(-D / 2.0, -E / 2.0);
        const double r2 = 0.25 * (D * D + E * E) - F;
        if (r2 > 0.0) {
            out.circle_center = center;
            out.circle_radius = std::sqrt(r2);
            out.circle_residual = 0.0;
            for (Point p : points)
                out.circle_residual = std::max(
                    out.circle_residual, std::abs(std::abs(p - center) - out.circle_radius));
            if (out.circle_residual <= tol) {
                std::vector<double> angles;
                angles.reserve(points.size());
                for (Point p : points) {
                    const Point d = p - center;
                    angles.push_back(std::atan2(d.imag(), d.real()));
                }
                std::sort(angles.begin(), angles.end());
                double gap = 2.0 * M_PI - (angles.back() - angles.front());
                for (size_t i = 0; i + 1 < angles.size(); ++i)
                    gap = std::max(gap, angles[i + 1] - angles[i]);
                out.max_angular_gap = gap;
                // Absolute guard: sparse random samples of a full circle leave
                // gaps of order log(n)/n, far below one radian.
                const double gap_threshold = std::max(tol / out.circle_radius, 1.2);
                out.kind = gap > gap_threshold ? ComponentClass::CircularArc
                                               : ComponentClass::Circle;
                return out;
            }
        }
    }
    out.kind = ComponentClass::Nontrivial;
    return out;
}

} // namespace kakeya
