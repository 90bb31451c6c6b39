#include <kakeya/errors.hpp>
#include <kakeya/raster.hpp>

#include <deque>
#include <fstream>

namespace kakeya {

namespace {

double dilation_radius(const GridSpec& grid) { return grid.cell / std::sqrt(2.0); }

void require_scene_fits(const GridSpec& grid, const Box& scene_box) {
    if (scene_box.empty()) return;
    if (!grid.box().contains(scene_box))
        throw SceneOutOfBoundsError("scene does not fit inside the grid box");
}

// Scan the inflated bounding box of a primitive, setting cells whose center
// is within r of the primitive.
void raster_bbox_scan(RasterMask& mask, const Primitive& prim, double r) {
    const GridSpec& g = mask.grid();
    const Box box = bounding_box(prim).inflated(r);
    const long c0 = std::max(0L, g.col_of(box.xmin));
    const long c1 = std::min(g.cols() - 1, g.col_of(box.xmax));
    const long r0 = std::max(0L, g.row_of(box.ymin));
    const long r1 = std::min(g.rows() - 1, g.row_of(box.ymax));
    for (long row = r0; row <= r1; ++row)
        for (long col = c0; col <= c1; ++col)
            if (!mask.get(row, col) && distance_to(prim, g.cell_center(row, col)) <= r)
                mask.set(row, col);
}

// Column walk for segments: cheap for long diagonal segments whose bounding
// box would be quadratic in their length.
void raster_segment(RasterMask& mask, const SegmentPrim& seg, double r) {
    const GridSpec& g = mask.grid();
    Point a = seg.a, b = seg.b;
    if (a.real() > b.real()) std::swap(a, b);
    const double dx = b.real() - a.real();
    if (dx <= g.cell) {
        raster_bbox_scan(mask, seg, r);
        return;
    }
    const long c0 = std::max(0L, g.col_of(a.real() - r));
    const long c1 = std::min(g.cols() - 1, g.col_of(b.real() + r));
    const double slope = (b.imag() - a.imag()) / dx;
    for (long col = c0; col <= c1; ++col) {
        const double x0 = g.xmin + double(col) * g.cell;
        const double x1 = x0 + g.cell;
        // Parameter window of the segment within [x0 - r, x1 + r].
        const double t0 = std::clamp((x0 - r - a.real()) / dx, 0.0, 1.0);
        const double t1 = std::clamp((x1 + r - a.real()) / dx, 0.0, 1.0);
        const double ya = a.imag() + slope * (t0 * dx);
        const double yb = a.imag() + slope * (t1 * dx);
        const long r0 = std::max(0L, g.row_of(std::min(ya, yb) - r));
        const long r1 = std::min(g.rows() - 1, g.row_of(std::max(ya, yb) + r));
        for (long row = r0; row <= r1; ++row)
            if (!mask.get(row, col) &&
                segment_distance(g.cell_center(row, col), seg.a, seg.b) <= r)
                mask.set(row, col);
    }
}

// Row-parity interior fill plus a dilation band around the edges; equivalent
// to the center-within-r predicate but linear in vertices per row.
void raster_polygon(RasterMask& mask, const PolygonPrim& poly, double r) {
    const GridSpec& g = mask.grid();
    const size_t n = poly.vertices.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++)
        raster_segment(mask, SegmentPrim{poly.vertices[j], poly.vertices[i]}, r);

    const Box box = bounding_box(Primitive(poly));
    const long r0 = std::max(0L, g.row_of(box.ymin));
    const long r1 = std::min(g.rows() - 1, g.row_of(box.ymax));
    std::vector<double> crossings;
    for (long row = r0; row <= r1; ++row) {
        const double y = g.ymin + (double(row) + 0.5) * g.cell;
        crossings.clear();
        for (size_t i = 0, j = n - 1; i < n; j = i++) {
            const Point a = poly.vertices[j], b = poly.vertices[i];
            if ((b.imag() > y) != (a.imag() > y))
                crossings.push_back(b.real() +
                                    (y - b.imag()) * (a.real() - b.real()) / (a.imag() - b.imag()));
        }
        std::sort(crossings.begin(), crossings.end());
        for (size_t i = 0; i + 1 < crossings.size(); i += 2) {
            const long c0 = std::max(0L, (long)std::ceil((crossings[i] - g.xmin) / g.cell - 0.5));
            const long c1 =
                std::min(g.cols() - 1, (long)std::floor((crossings[i + 1] - g.xmin) / g.cell - 0.5));
            for (long col = c0; col <= c1; ++col) mask.set(row, col);
        }
    }
}

void raster_primitive(RasterMask& mask, const Primitive& prim, double r) {
    if (const auto* seg = std::get_if<SegmentPrim>(&prim)) {
        raster_segment(mask, *seg, r);
        return;
    }
    if (const auto* poly = std::get_if<PolygonPrim>(&prim)) {
        raster_polygon(mask, *poly, r);
        return;
    }
    if (const auto* cloud = std::get_if<PointCloudPrim>(&prim)) {
        const GridSpec& g = mask.grid();
        for (Point p : cloud->points) {
            const long c0 = g.col_of(p.real() - r), c1 = g.col_of(p.real() + r);
            const long r0 = g.row_of(p.imag() - r), r1 = g.row_of(p.imag() + r);
            for (long row = r0; row <= r1; ++row)
                for (long col = c0; col <= c1; ++col)
                    if (std::abs(g.cell_center(row, col) - p) <= r) mask.set(row, col);
        }
        return;
    }
    raster_bbox_scan(mask, prim, r);
}

bool polygon_is_convex(const std::vector<Point>& v) {
    const size_t n = v.size();
    if (n < 3) return false;
    int sign = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point e1 = v[(i + 1) % n] - v[i];
        const Point e2 = v[(i + 2) % n] - v[(i + 1) % n];
        const double c = cross(e1, e2);
        if (std::abs(c) < 1e-15) continue;
        const int s = c > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    return true;
}

// Swept region of a convex primitive under a straight translation by `c`,
// as a hull polygon (possibly degenerate, then a segment).
std::optional<Primitive> translation_swept_shape(const Primitive& prim, Point c) {
    std::vector<Point> pts;
    if (const auto* seg = std::get_if<SegmentPrim>(&prim)) {
        pts = {seg->a, seg->b, seg->a + c, seg->b + c};
    } else if (const auto* rect = std::get_if<RectanglePrim>(&prim)) {
        pts = rectangle_corners(*rect);
        const size_t n = pts.size();
        for (size_t i = 0; i < n; ++i) pts.push_back(pts[i] + c);
    } else if (const auto* poly = std::get_if<PolygonPrim>(&prim)) {
        if (!polygon_is_convex(poly->vertices)) return std::nullopt;
        pts = poly->vertices;
        const size_t n = pts.size();
        for (size_t i = 0; i < n; ++i) pts.push_back(pts[i] + c);
    } else {
        return std::nullopt;
    }
    std::vector<Point> hull = convex_hull(pts);
    if (hull.size() >= 3) return PolygonPrim{std::move(hull)};
    if (hull.size() == 2) return SegmentPrim{hull[0], hull[1]};
    if (hull.size() == 1) return SegmentPrim{hull[0], hull[0]};
    return std::nullopt;
}

long refine_steps_for(const Movement& movement, const Scene& scene, long start_steps,
                      double cell) {
    long steps = std::max(start_steps, 2L);
    if (auto c = movement.translation_path()) {
        const double d = std::abs(*c);
        return std::max(steps, (long)std::ceil(d / cell) + 1);
    }
    if (auto rp = movement.rotation_path()) {
        const Box box = bounding_box(scene);
        double rmax = 0.0;
        for (double x : {box.xmin, box.xmax})
            for (double y : {box.ymin, box.ymax})
                rmax = std::max(rmax, std::abs(Point(x, y) - rp->center));
        return std::max(steps, (long)std::ceil(std::abs(rp->angle) * rmax / cell) + 1);
    }
    const double rmax0 = max_radius_about_origin(scene);
    for (int iter = 0; iter < 22; ++iter) {
        double worst = 0.0;
        RigidMotion prev = movement.at(0.0);
        for (long i = 1; i <= steps; ++i) {
            const RigidMotion cur = movement.at(double(i) / double(steps));
            worst = std::max(worst, std::abs(cur.u() - prev.u()) * rmax0 +
                                        std::abs(cur.c() - prev.c()));
            prev = cur;
        }
        if (worst <= cell) break;
        steps *= 2;
    }
    return steps;
}

} // namespace

GridSpec grid_fitting(const Box& box, double cell, long pad_cells) {
    if (!(cell > 0.0)) throw InvalidArgumentError("cell size must be positive");
    GridSpec g;
    g.cell = cell;
    const double pad = double(pad_cells) * cell;
    g.xmin = box.xmin - pad;
    g.ymin = box.ymin - pad;
    g.xmax = box.xmax + pad;
    g.ymax = box.ymax + pad;
    return g;
}

long RasterMask::count() const {
    long n = 0;
    for (uint8_t b : bits_) n += b;
    return n;
}

void RasterMask::require_same_grid(const RasterMask& o) const {
    if (!grid_.same_geometry(o.grid_))
        throw GridMismatchError("raster masks live on different grids");
}

void RasterMask::unite(const RasterMask& o) {
    require_same_grid(o);
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
}

RasterMask RasterMask::intersect(const RasterMask& o) const {
    require_same_grid(o);
    RasterMask out(grid_);
    for (size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] & o.bits_[i];
    return out;
}

RasterMask RasterMask::subtract(const RasterMask& o) const {
    require_same_grid(o);
    RasterMask out(grid_);
    for (size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] & uint8_t(1 - o.bits_[i]);
    return out;
}

long RasterMask::uncovered_count(const RasterMask& other, long band_cells) const {
    require_same_grid(other);
    long misses = 0;
    for (long row = 0; row < rows_; ++row) {
        for (long col = 0; col < cols_; ++col) {
            if (!get(row, col)) continue;
            bool covered = false;
            for (long dr = -band_cells; dr <= band_cells && !covered; ++dr)
                for (long dc = -band_cells; dc <= band_cells && !covered; ++dc)
                    covered = other.get(row + dr, col + dc);
            if (!covered) ++misses;
        }
    }
    return misses;
}

bool RasterMask::subset_within(const RasterMask& other, long band_cells) const {
    return uncovered_count(other, band_cells) == 0;
}

void rasterize_into(RasterMask& mask, const Scene& scene) {
    require_scene_fits(mask.grid(), bounding_box(scene));
    const double r = dilation_radius(mask.grid());
    for (const auto& prim : scene.primitives) raster_primitive(mask, prim, r);
}

RasterMask rasterize(const Scene& scene, const GridSpec& grid) {
    RasterMask mask(grid);
    rasterize_into(mask, scene);
    return mask;
}

double area(const RasterMask& mask) { return mask.area(); }

RasterMask sweep(const Movement& movement, const Scene& scene, long time_steps,
                 const GridSpec& grid) {
    if (time_steps < 2) throw InvalidArgumentError("sweep requires time_steps >= 2");
    RasterMask mask(grid);
    const double r = dilation_radius(grid);

    Scene sampled_part; // primitives that need the generic time-sampled union
    if (auto c = movement.translation_path()) {
        require_scene_fits(grid, bounding_box(scene));
        for (const auto& prim : scene.primitives) {
            if (const auto* cloud = std::get_if<PointCloudPrim>(&prim)) {
                for (Point p : cloud->points) {
                    const SegmentPrim track{p, p + *c};
                    require_scene_fits(grid, bounding_box(Primitive(track)));
                    raster_segment(mask, track, r);
                }
                continue;
            }
            if (auto shape = translation_swept_shape(prim, *c)) {
                require_scene_fits(grid, bounding_box(*shape));
                raster_primitive(mask, *shape, r);
            } else {
                sampled_part.add(prim);
            }
        }
        if (sampled_part.empty()) return mask;
    } else if (auto rp = movement.rotation_path()) {
        // An arc turning about its own center sweeps an arc of enlarged span.
        require_scene_fits(grid, bounding_box(scene));
        for (const auto& prim : scene.primitives) {
            const auto* arc = std::get_if<ArcPrim>(&prim);
            if (arc && std::abs(arc->center - rp->center) <= 1e-12) {
                ArcPrim swept = *arc;
                swept.angle0 = arc->angle0 + std::min(rp->angle, 0.0);
                swept.sweep = std::min(arc->sweep + std::abs(rp->angle), 2.0 * M_PI);
                require_scene_fits(grid, bounding_box(Primitive(swept)));
                raster_primitive(mask, swept, r);
            } else {
                sampled_part.add(prim);
            }
        }
        if (sampled_part.empty()) return mask;
    } else {
        sampled_part = scene;
    }

    const long steps = refine_steps_for(movement, sampled_part, time_steps, grid.cell);
    for (long i = 0; i <= steps; ++i) {
        const double t = double(i) / double(steps);
        const Scene placed = transformed(sampled_part, movement.at(t));
        require_scene_fits(grid, bounding_box(placed));
        for (const auto& prim : placed.primitives) raster_primitive(mask, prim, r);
    }
    return mask;
}

RasterMask neighborhood(const RasterMask& mask, double eps) {
    if (eps < 0.0) throw InvalidArgumentError("neighborhood radius must be >= 0");
    const GridSpec& g = mask.grid();
    const long reach = (long)std::floor(eps / g.cell + 1e-12);
    std::vector<std::pair<long, long>> offsets;
    for (long dr = -reach; dr <= reach; ++dr)
        for (long dc = -reach; dc <= reach; ++dc)
            if (std::hypot(double(dr), double(dc)) * g.cell <= eps) offsets.emplace_back(dr, dc);

    RasterMask out(g);
    for (long row = 0; row < mask.rows(); ++row)
        for (long col = 0; col < mask.cols(); ++col)
            if (mask.get(row, col))
                for (const auto& [dr, dc] : offsets) out.set(row + dr, col + dc);
    return out;
}

int32_t ComponentLabeling::label_at(long row, long col) const {
    if (row < 0 || col < 0 || row >= grid.rows() || col >= grid.cols()) return -1;
    return labels[size_t(row * grid.cols() + col)];
}

ComponentLabeling connected_components(const RasterMask& domain, const RasterMask& obstacle) {
    if (!domain.grid().same_geometry(obstacle.grid()))
        throw GridMismatchError("domain and obstacle grids differ");
    const long rows = domain.rows(), cols = domain.cols();
    ComponentLabeling out;
    out.grid = domain.grid();
    out.labels.assign(size_t(rows * cols), -1);

    auto clear = [&](long r, long c) {
        return r >= 0 && c >= 0 && r < rows && c < cols && domain.get(r, c) && !obstacle.get(r, c);
    };

    std::deque<std::pair<long, long>> queue;
    for (long row = 0; row < rows; ++row) {
        for (long col = 0; col < cols; ++col) {
            if (!clear(row, col) || out.labels[size_t(row * cols + col)] >= 0) continue;
            const int32_t id = int32_t(out.count++);
            long size = 0;
            queue.push_back({row, col});
            out.labels[size_t(row * cols + col)] = id;
            while (!queue.empty()) {
                auto [r, c] = queue.front();
                queue.pop_front();
                ++size;
                const long nr[4] = {r - 1, r + 1, r, r};
                const long nc[4] = {c, c, c - 1, c + 1};
                for (int k = 0; k < 4; ++k) {
                    if (clear(nr[k], nc[k]) && out.labels[size_t(nr[k] * cols + nc[k])] < 0) {
                        out.labels[size_t(nr[k] * cols + nc[k])] = id;
                        queue.push_back({nr[k], nc[k]});
                    }
                }
            }
            out.sizes.push_back(size);
        }
    }
    return out;
}

RasterMask disc_mask(const GridSpec& grid, Point center, double radius) {
    RasterMask mask(grid);
    const double r = dilation_radius(grid);
    const long c0 = std::max(0L, grid.col_of(center.real() - radius - r));
    const long c1 = std::min(grid.cols() - 1, grid.col_of(center.real() + radius + r));
    const long r0 = std::max(0L, grid.row_of(center.imag() - radius - r));
    const long r1 = std::min(grid.rows() - 1, grid.row_of(center.imag() + radius + r));
    for (long row = r0; row <= r1; ++row)
        for (long col = c0; col <= c1; ++col)
            if (std::abs(grid.cell_center(row, col) - center) <= radius + r) mask.set(row, col);
    return mask;
}

void write_pgm(const std::string& path, const RasterMask& mask) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << "P5\n" << mask.cols() << " " << mask.rows() << "\n255\n";
    // Top row first.
    for (long row = mask.rows() - 1; row >= 0; --row)
        for (long col = 0; col < mask.cols(); ++col)
            out.put(mask.get(row, col) ? char(255) : char(0));
}

} // namespace kakeya
