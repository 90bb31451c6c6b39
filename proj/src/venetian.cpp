#include <kakeya/errors.hpp>
#include <kakeya/venetian.hpp>

namespace kakeya {

namespace {

Point perpendicular(Point d) { return Point(-d.imag(), d.real()); }

std::pair<double, double> shadow_interval(const RectanglePrim& rect, Point axis) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Point c : rectangle_corners(rect)) {
        const double v = dot(c, axis);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

} // namespace

Scene RectangleSystem::scene() const {
    Scene s;
    for (const auto& r : rectangles) s.add(r);
    return s;
}

BlindParams default_blind_params(long generations) {
    if (generations < 1 || generations > 6)
        throw InvalidArgumentError("default schedule covers 1..6 generations");
    BlindParams p;
    p.limit_direction = Point(1.0, 0.0);
    // Width schedule tuned so each refinement stays width-limited: the tilted
    // slats then reach across their whole parent (earlier shadows and distance
    // sets survive) while the accumulated slat spreads keep the
    // current-direction shadow under 1/n through six generations.
    const double widths[6] = {0.27, 0.1485, 0.1039, 0.0811, 0.0649, 0.0519};
    for (long n = 1; n <= generations; ++n) {
        p.directions.push_back(unit_from_angle(1.0 / double(n)));
        p.widths.push_back(widths[n - 1]);
        if (n > 1) p.slat_counts.push_back(3);
    }
    p.initial_length = 0.57;
    return p;
}

void validate(const BlindParams& params) {
    if (params.directions.empty()) throw InvalidArgumentError("no directions given");
    if (params.widths.size() != params.directions.size())
        throw InvalidArgumentError("one width per generation required");
    if (params.slat_counts.size() + 1 != params.directions.size())
        throw InvalidArgumentError("one slat count per refinement step required");
    if (!(params.widths.front() < 1.0))
        throw InvalidArgumentError("width of K_1 must be less than 1");
    for (size_t i = 0; i + 1 < params.widths.size(); ++i)
        if (!(params.widths[i + 1] < params.widths[i]))
            throw InvalidArgumentError("widths must be strictly decreasing");
    for (size_t i = 0; i < params.directions.size(); ++i)
        for (size_t j = i + 1; j < params.directions.size(); ++j)
            if (std::abs(params.directions[i] - params.directions[j]) < 1e-12)
                throw InvalidArgumentError("directions must be pairwise distinct");
    if (!(params.initial_length > params.widths.front()))
        throw InvalidArgumentError("K_1 must be longer than wide");
}

RectangleSystem init_blind(const BlindParams& params) {
    validate(params);
    RectangleSystem sys;
    sys.generation = 1;
    sys.direction = params.directions.front();
    sys.limit_direction = params.limit_direction;
    sys.rectangles.push_back(
        RectanglePrim{Point(0.0, 0.0), sys.direction, params.initial_length, params.widths[0]});
    return sys;
}

RectangleSystem refine(const RectangleSystem& sys, Point next_direction, long slats,
                       double width) {
    if (slats < 2) throw InvalidArgumentError("refine requires at least 2 slats");
    next_direction /= std::abs(next_direction);
    const double delta =
        std::abs(wrap_angle(std::atan2(next_direction.imag(), next_direction.real()) -
                            std::atan2(sys.direction.imag(), sys.direction.real())));
    if (delta < 1e-12)
        throw InvalidArgumentError("next direction must differ from the current one");
    const double cosd = std::cos(delta), sind = std::sin(delta);

    RectangleSystem out;
    out.generation = sys.generation + 1;
    out.direction = next_direction;
    out.limit_direction = sys.limit_direction;

    for (const auto& parent : sys.rectangles) {
        const double lp = parent.length, wp = parent.width;
        if (width >= wp)
            throw SlatsDontFitError("slat width must be smaller than the parent width");
        // Child length limited by both parent extents once pivoted by delta.
        const double by_width = (wp - width * cosd) / std::max(sind, 1e-15);
        const double by_length = (lp - width * sind) / std::max(cosd, 1e-15);
        const double len = 0.999 * std::min(by_width, by_length);
        if (!(len > width))
            throw SlatsDontFitError("pivoted slats cannot be longer than wide inside this parent");

        const double axis_span = len * cosd + width * sind; // child extent along the parent axis
        const double smax = std::max(0.0, 0.5 * (lp - axis_span));
        for (long i = 0; i < slats; ++i) {
            const double s = slats == 1 ? 0.0
                                        : -smax + 2.0 * smax * double(i) / double(slats - 1);
            RectanglePrim child;
            child.center = parent.center + s * parent.direction;
            child.direction = next_direction;
            child.length = len;
            child.width = width;
            out.rectangles.push_back(child);
        }
    }
    return out;
}

double projection_measure(const RectangleSystem& sys, Point direction) {
    direction /= std::abs(direction);
    const Point axis = perpendicular(direction);
    std::vector<std::pair<double, double>> intervals;
    intervals.reserve(sys.rectangles.size());
    for (const auto& r : sys.rectangles) intervals.push_back(shadow_interval(r, axis));
    return interval_union_measure(std::move(intervals));
}

double distance_set_measure(const RectangleSystem& sys, Point p) {
    std::vector<std::pair<double, double>> intervals;
    intervals.reserve(sys.rectangles.size());
    for (const auto& r : sys.rectangles) {
        const double dmin = distance_to(Primitive(r), p);
        double dmax = 0.0;
        for (Point c : rectangle_corners(r)) dmax = std::max(dmax, std::abs(c - p));
        intervals.push_back({dmin, dmax});
    }
    return interval_union_measure(std::move(intervals));
}

bool rectangle_contains(const RectanglePrim& outer, const RectanglePrim& inner, double tol) {
    for (Point c : rectangle_corners(inner)) {
        const Point d = c - outer.center;
        if (std::abs(dot(d, outer.direction)) > 0.5 * outer.length + tol) return false;
        if (std::abs(cross(outer.direction, d)) > 0.5 * outer.width + tol) return false;
    }
    return true;
}

BlindMoverResult blind_mover(const RectangleSystem& sys, double R, double cell) {
    const Point e = sys.limit_direction / std::abs(sys.limit_direction);
    BlindMoverResult result;
    result.movement = Movement::elementary(translation(R * e));
    result.report.name = "blind_mover";

    // Measure in the frame where e is the +x axis (area is motion invariant);
    // the excursion box stays tight for large R.
    const double theta = std::atan2(e.imag(), e.real());
    const RigidMotion frame = rotation(Point(0.0, 0.0), -theta);
    Scene turned = transformed(sys.scene(), frame);
    const Movement slide = Movement::elementary(translation(Point(R, 0.0)));
    Box box = bounding_box(turned);
    box.expand(bounding_box(transformed(turned, translation(Point(R, 0.0)))));
    const GridSpec grid = grid_fitting(box, cell);
    const double measured = sweep(slide, turned, 2, grid).area();

    const double shadow = projection_measure(sys, e);
    double extent_lo = std::numeric_limits<double>::infinity(), extent_hi = -extent_lo;
    double band_len = 0.0;
    for (const auto& r : sys.rectangles) {
        const auto iv = shadow_interval(r, e);
        extent_lo = std::min(extent_lo, iv.first);
        extent_hi = std::max(extent_hi, iv.second);
        band_len += r.length + r.width + std::abs(R);
    }
    const double caps = shadow * (extent_hi - extent_lo);
    const double band = 4.0 * cell * band_len;

    result.report.measured["sweep_area"] = measured;
    result.report.measured["shadow"] = shadow;
    result.report.measured["caps"] = caps;
    result.report.measured["band"] = band;
    result.report.add_check("sweep_within_slab", measured, std::abs(R) * shadow + caps + band, 0.0);
    return result;
}

} // namespace kakeya
