#include <kakeya/constructions.hpp>
#include <kakeya/errors.hpp>

#include <map>

namespace kakeya {

namespace {

constexpr double kParallelTol = 1e-9;

SegmentPrim segment_of(const Scene& scene) {
    if (scene.primitives.size() != 1)
        throw InvalidArgumentError("needle scene must hold exactly one segment");
    const auto* seg = std::get_if<SegmentPrim>(&scene.primitives.front());
    if (!seg) throw InvalidArgumentError("needle scene must hold exactly one segment");
    return *seg;
}

SegmentPrim stage_end_pose(const ScheduleStage& stage) {
    const SegmentPrim seg = segment_of(stage.scene);
    const RigidMotion end = stage.movement.end();
    return SegmentPrim{end(seg.a), end(seg.b)};
}

// Elementary rotation when |angle| < pi, equal elementary pieces otherwise.
Movement rotation_movement(Point center, double angle) {
    if (std::abs(angle) < 1e-15) return Movement::constant_identity();
    const long parts = (long)std::floor(std::abs(angle) / M_PI) + 1;
    if (parts == 1) return Movement::elementary(rotation(center, angle));
    std::vector<double> breaks(size_t(parts) + 1);
    for (long i = 0; i <= parts; ++i) breaks[size_t(i)] = double(i) / double(parts);
    std::vector<Movement> segs(size_t(parts),
                               Movement::elementary(rotation(center, angle / double(parts))));
    return Movement::piecewise(std::move(breaks), std::move(segs));
}

// Parallel transport of a directed segment onto another with the same
// direction: tilt by theta_mag, slide along the tilted line, tilt back, slide
// home. Lands exactly on `to`.
std::vector<ScheduleStage> join_parallel(const SegmentPrim& from, const SegmentPrim& to,
                                         double theta_mag) {
    const double len = std::abs(from.b - from.a);
    if (!(len > 0.0)) throw InvalidArgumentError("degenerate needle segment");
    const Point e = (from.b - from.a) / len;
    const Point e_to = (to.b - to.a) / std::abs(to.b - to.a);
    if (std::abs(e - e_to) > 1e-7)
        throw InvalidArgumentError("parallel join requires equal directions");

    std::vector<ScheduleStage> stages;
    const double lateral = cross(e, to.a - from.a);

    auto push = [&](Movement m, const SegmentPrim& scene, const char* label, bool in_tree,
                    double path) {
        stages.push_back({std::move(m), Scene(Primitive(scene)), label, in_tree, path});
    };

    if (std::abs(lateral) <= 1e-12) {
        const Point d = to.a - from.a;
        if (std::abs(d) > 0.0)
            push(Movement::elementary(translation(d)), from, "join-slide", false, std::abs(d));
        return stages;
    }

    const double theta = std::copysign(std::clamp(theta_mag, 1e-7, M_PI / 3.0), lateral);
    const Point e_tilt = e * unit_from_angle(theta);

    push(rotation_movement(from.a, theta), from, "join-tilt", false, std::abs(theta) * len);
    SegmentPrim pose{from.a, from.a + len * e_tilt};

    const double slide = lateral / std::sin(theta);
    push(Movement::elementary(translation(slide * e_tilt)), pose, "join-slide", false,
         std::abs(slide));
    pose = SegmentPrim{pose.a + slide * e_tilt, pose.b + slide * e_tilt};

    push(rotation_movement(pose.a, -theta), pose, "join-tilt", false, std::abs(theta) * len);
    pose = SegmentPrim{pose.a, pose.a + len * e};

    const Point home = to.a - pose.a; // parallel to e up to rounding
    if (std::abs(home) > 0.0)
        push(Movement::elementary(translation(home)), pose, "join-slide", false, std::abs(home));
    return stages;
}

} // namespace

std::vector<std::pair<double, double>> CantorSpec::intervals() const {
    if (!(ratio > 0.0 && ratio < 0.5))
        throw InvalidArgumentError("Cantor ratio must lie in (0, 1/2)");
    if (depth < 0) throw InvalidArgumentError("Cantor depth must be >= 0");
    std::vector<std::pair<double, double>> cur{{lo, hi}};
    for (long d = 0; d < depth; ++d) {
        std::vector<std::pair<double, double>> next;
        next.reserve(cur.size() * 2);
        for (const auto& [a, b] : cur) {
            const double piece = (b - a) * ratio;
            next.push_back({a, a + piece});
            next.push_back({b - piece, b});
        }
        cur = std::move(next);
    }
    return cur;
}

double CantorSpec::total_length() const {
    return (hi - lo) * std::pow(2.0 * ratio, double(depth));
}

SegmentPrim NeedleSchedule::end_pose() const {
    if (stages.empty()) return start_pose;
    return stage_end_pose(stages.back());
}

double NeedleSchedule::pose_mismatch() const {
    double worst = 0.0;
    for (size_t i = 0; i + 1 < stages.size(); ++i) {
        const SegmentPrim end = stage_end_pose(stages[i]);
        const SegmentPrim next = segment_of(stages[i + 1].scene);
        worst = std::max(worst, std::max(std::abs(end.a - next.a), std::abs(end.b - next.b)));
    }
    if (!stages.empty()) {
        const SegmentPrim first = segment_of(stages.front().scene);
        worst = std::max(worst,
                         std::max(std::abs(first.a - start_pose.a), std::abs(first.b - start_pose.b)));
    }
    return worst;
}

Movement trivial_parallel_mover(const Scene& scene, Point direction, double distance) {
    const double n = std::abs(direction);
    if (!(n > 0.0)) throw InvalidArgumentError("direction must be a nonzero vector");
    direction /= n;
    for (const auto& prim : scene.primitives) {
        const auto* seg = std::get_if<SegmentPrim>(&prim);
        if (!seg) throw NotParallelError("scene contains a primitive that is not a segment");
        const double len = std::abs(seg->b - seg->a);
        if (!(len > 0.0)) continue;
        const Point d = (seg->b - seg->a) / len;
        if (std::abs(cross(d, direction)) > kParallelTol)
            throw NotParallelError("segment deviates from the sliding direction");
    }
    if (distance == 0.0) return Movement::constant_identity();
    return Movement::elementary(translation(distance * direction));
}

Movement trivial_concentric_mover(const Scene& scene, Point center, double angle) {
    for (const auto& prim : scene.primitives) {
        const auto* arc = std::get_if<ArcPrim>(&prim);
        if (!arc) throw NotConcentricError("scene contains a primitive that is not an arc");
        if (std::abs(arc->center - center) > kParallelTol)
            throw NotConcentricError("arc is not centered at the rotation center");
    }
    return rotation_movement(center, angle);
}

NeedleSchedule pal_join(double segment_length, double lateral_offset, double eps) {
    if (!(eps > 0.0)) throw InvalidArgumentError("pal_join requires eps > 0");
    if (!(segment_length > 0.0)) throw InvalidArgumentError("segment length must be positive");
    if (lateral_offset < 0.0) throw InvalidArgumentError("lateral offset must be >= 0");

    NeedleSchedule schedule;
    schedule.total_area_budget = eps;
    schedule.start_pose = SegmentPrim{Point(0.0, 0.0), Point(segment_length, 0.0)};
    if (lateral_offset == 0.0) return schedule;

    const double theta =
        eps / (2.0 * (lateral_offset + segment_length) * (lateral_offset + segment_length));
    const SegmentPrim target{Point(0.0, lateral_offset), Point(segment_length, lateral_offset)};
    schedule.stages = join_parallel(schedule.start_pose, target, theta);
    return schedule;
}

// ---------------------------------------------------------------------------
// Perron tree
// ---------------------------------------------------------------------------

namespace {

// Elementary triangle in the base frame: base [x0, x1] on the x-axis plus the
// common apex, both translated leftward by the accumulated shift.
struct FramePiece {
    double x0;
    double x1;
    double apex_x;
    long index = 0; // elementary triangle number in base order
};

double frame_union_area(const std::vector<FramePiece>& pieces, double height, long scanlines) {
    std::vector<std::pair<double, double>> iv;
    iv.reserve(pieces.size());
    double total = 0.0;
    const double dy = height / double(scanlines);
    for (long j = 0; j < scanlines; ++j) {
        const double w = (double(j) + 0.5) / double(scanlines); // y fraction
        iv.clear();
        for (const auto& p : pieces) {
            const double l = p.x0 + (p.apex_x - p.x0) * w;
            const double r = p.x1 + (p.apex_x - p.x1) * w;
            iv.push_back({l, r});
        }
        total += interval_union_measure(iv) * dy;
    }
    return total;
}

void shift_pieces(std::vector<FramePiece>& pieces, double shift) {
    for (auto& p : pieces) {
        p.x0 -= shift;
        p.x1 -= shift;
        p.apex_x -= shift;
    }
}

std::pair<double, double> base_span(const std::vector<FramePiece>& pieces) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& p : pieces) {
        lo = std::min(lo, p.x0);
        hi = std::max(hi, p.x1);
    }
    return {lo, hi};
}

// Merge by translating the right block leftward; the landing fraction of its
// left edge inside the left block's base span is chosen to minimize the
// scanline union area.
struct BlockVariant {
    std::vector<FramePiece> pieces;
    double area = 0.0;
};

// Merge two blocks, translating the right one leftward; returns the best few
// shift choices (beam search keeps the level-wise greedy from locking into a
// locally good but globally poor overlap).
std::vector<BlockVariant> merge_blocks(const std::vector<BlockVariant>& left,
                                       const std::vector<BlockVariant>& right, double height,
                                       long scanlines, size_t beam) {
    std::vector<BlockVariant> results;
    for (const auto& lv : left) {
        for (const auto& rv : right) {
            const auto [llo, lhi] = base_span(lv.pieces);
            const auto [rlo, rhi] = base_span(rv.pieces);
            (void)rhi;
            const double span = lhi - llo;
            double best_shift = 0.0;
            double best_area = std::numeric_limits<double>::infinity();
            auto try_shift = [&](double shift) {
                if (shift < 0.0) return;
                std::vector<FramePiece> candidate = rv.pieces;
                shift_pieces(candidate, shift);
                candidate.insert(candidate.end(), lv.pieces.begin(), lv.pieces.end());
                const double a = frame_union_area(candidate, height, scanlines);
                if (a < best_area - 1e-15) {
                    best_area = a;
                    best_shift = shift;
                }
            };
            for (int step = 0; step <= 48; ++step)
                try_shift(rlo - (llo + span * double(step) / 48.0));
            double window = span / 48.0;
            for (int round = 0; round < 4; ++round) {
                const double pivot = best_shift;
                for (int step = -3; step <= 3; ++step)
                    try_shift(pivot + window * double(step) / 4.0);
                window /= 4.0;
            }
            BlockVariant merged;
            merged.pieces = rv.pieces;
            shift_pieces(merged.pieces, best_shift);
            merged.pieces.insert(merged.pieces.end(), lv.pieces.begin(), lv.pieces.end());
            merged.area = best_area;
            results.push_back(std::move(merged));
        }
    }
    std::sort(results.begin(), results.end(),
              [](const BlockVariant& a, const BlockVariant& b) { return a.area < b.area; });
    if (results.size() > beam) results.resize(beam);
    return results;
}

std::vector<FramePiece> build_tree(long k, double base, double apex_x, long scanlines) {
    const long n = 1L << k;
    const size_t beam = 2;
    std::vector<std::vector<BlockVariant>> blocks;
    blocks.reserve(size_t(n));
    for (long i = 0; i < n; ++i) {
        FramePiece p;
        p.x0 = base * double(i) / double(n);
        p.x1 = base * double(i + 1) / double(n);
        p.apex_x = apex_x;
        p.index = i;
        blocks.push_back({BlockVariant{{p}, 0.0}});
    }
    while (blocks.size() > 1) {
        std::vector<std::vector<BlockVariant>> next;
        next.reserve(blocks.size() / 2);
        for (size_t i = 0; i + 1 < blocks.size(); i += 2)
            next.push_back(merge_blocks(blocks[i], blocks[i + 1], 1.0, scanlines, beam));
        blocks = std::move(next);
    }
    // Restore the base order of the elementary pieces.
    std::vector<FramePiece> pieces = blocks.front().front().pieces;
    std::sort(pieces.begin(), pieces.end(),
              [](const FramePiece& a, const FramePiece& b) { return a.index < b.index; });
    return pieces;
}

struct CanonicalTree {
    std::vector<FramePiece> pieces; // height-1 triangles, order = base order
    double base = 0.0;
    double apex_x = 0.0;
    double union_area = 0.0; // scanline measure
};

const CanonicalTree& canonical_sector_tree(long k) {
    static std::map<long, CanonicalTree> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    CanonicalTree tree;
    tree.base = 2.0 * std::tan(M_PI / 6.0);
    tree.apex_x = tree.base / 2.0;
    const long scanlines = 512;
    tree.pieces = build_tree(k, tree.base, tree.apex_x, scanlines);
    tree.union_area = frame_union_area(tree.pieces, 1.0, 4096);
    return cache.emplace(k, std::move(tree)).first->second;
}

} // namespace

double perron_tree_area_ratio(long k) {
    const CanonicalTree& tree = canonical_sector_tree(k);
    return tree.union_area / (0.5 * tree.base);
}

PerronTree perron_tree(long k, const Scene& base_triangle, double cell) {
    if (k < 1) throw InvalidArgumentError("perron_tree requires k >= 1");
    if (base_triangle.primitives.size() != 1)
        throw InvalidArgumentError("base must be a single triangle polygon");
    const auto* poly = std::get_if<PolygonPrim>(&base_triangle.primitives.front());
    if (!poly || poly->vertices.size() != 3)
        throw InvalidArgumentError("base must be a single triangle polygon");

    // Base edge = vertices[0] -> vertices[1], apex above it in the frame.
    Point v0 = poly->vertices[0], v1 = poly->vertices[1], apex = poly->vertices[2];
    if (cross(v1 - v0, apex - v0) < 0.0) std::swap(v0, v1);
    const double base_len = std::abs(v1 - v0);
    if (!(base_len > 0.0)) throw InvalidArgumentError("degenerate triangle base");
    const Point e = (v1 - v0) / base_len;
    const double height = cross(e, apex - v0);
    if (!(height > 0.0)) throw InvalidArgumentError("degenerate triangle");
    const double apex_x = dot(e, apex - v0);

    // Work in the frame with the base on the x-axis and unit height, then map
    // back; a pure scaling of y keeps line/line intersections affine-exact.
    const long scanlines = 512;
    auto pieces = build_tree(k, base_len, apex_x, scanlines);

    auto to_world = [&](double x, double y) { return v0 + x * e + (y * height) * Point(-e.imag(), e.real()); };

    PerronTree out;
    const long n = 1L << k;
    for (long i = 0; i < n; ++i) {
        const FramePiece& p = pieces[size_t(i)];
        PerronPiece piece;
        piece.vertices = {to_world(p.x0, 0.0), to_world(p.x1, 0.0), to_world(p.apex_x, 1.0)};
        piece.apex = piece.vertices[2];
        piece.base_mid = to_world(0.5 * (p.x0 + p.x1), 0.0);
        piece.direction = (piece.base_mid - piece.apex) / std::abs(piece.base_mid - piece.apex);
        out.scene.add(PolygonPrim{piece.vertices});
        out.pieces.push_back(std::move(piece));
    }

    const GridSpec grid = grid_fitting(bounding_box(out.scene), cell);
    const double measured = rasterize(out.scene, grid).area();
    const double base_area = std::abs(polygon_area(poly->vertices));

    out.report.name = "perron_tree";
    out.report.measured["union_area"] = measured;
    out.report.measured["base_area"] = base_area;
    out.report.measured["area_ratio"] = measured / base_area;
    out.report.measured["scanline_area"] = frame_union_area(pieces, 1.0, 4096) * height;
    out.report.measured["pieces"] = double(n);
    out.report.add_check("union_smaller_than_base", measured, base_area, 0.0);
    return out;
}

// ---------------------------------------------------------------------------
// Needle reversal
// ---------------------------------------------------------------------------

namespace {

struct PlannedRay {
    Point apex;
    double angle_from; // needle direction entering the piece
    double angle_to;   // direction leaving it
};

} // namespace

ScheduleMeasurement measure_schedule(const NeedleSchedule& schedule, double cell,
                                     RasterMask* tree_mask_out) {
    ScheduleMeasurement out;
    out.stage_count = long(schedule.stages.size());

    // Shared grid for the in-tree rotations: their overlap carries the
    // construction's area savings and must be measured as a union.
    Box tree_box;
    for (const auto& stage : schedule.stages) {
        if (!stage.in_tree) continue;
        const SegmentPrim seg = segment_of(stage.scene);
        if (auto rp = stage.movement.rotation_path()) {
            const double r = std::max(std::abs(seg.a - rp->center), std::abs(seg.b - rp->center));
            tree_box.expand(rp->center + Point(r, r));
            tree_box.expand(rp->center - Point(r, r));
        } else {
            tree_box.expand(bounding_box(stage.scene));
        }
    }

    RasterMask tree_mask;
    bool have_tree = !tree_box.empty();
    if (have_tree) tree_mask = RasterMask(grid_fitting(tree_box, cell));

    for (const auto& stage : schedule.stages) {
        const SegmentPrim seg = segment_of(stage.scene);
        const double needle_len = std::abs(seg.b - seg.a);
        if (stage.in_tree) {
            tree_mask.unite(sweep(stage.movement, stage.scene, 2, tree_mask.grid()));
            out.band_allowance += 4.0 * cell * (stage.path_length + needle_len);
            continue;
        }
        // Joins: measure in a frame aligned with the travel so the grid stays
        // tight; coarsen the cell when a slide is very long. The movement is
        // conjugated into the frame (area is motion invariant).
        RigidMotion frame = identity_motion();
        Movement frame_movement = stage.movement;
        if (auto c = stage.movement.translation_path()) {
            if (std::abs(*c) > 0.0) {
                frame = rotation(Point(0.0, 0.0), -std::atan2(c->imag(), c->real()));
                frame_movement = Movement::elementary(translation(frame.u() * (*c)));
            }
        }
        const Scene turned = transformed(stage.scene, frame);
        Box box = bounding_box(turned);
        if (auto c = frame_movement.translation_path()) {
            box.expand(bounding_box(transformed(turned, translation(*c))));
        } else if (auto rp = stage.movement.rotation_path()) {
            const Point center = frame(rp->center);
            const SegmentPrim t = segment_of(turned);
            const double r = std::max(std::abs(t.a - center), std::abs(t.b - center));
            box.expand(center + Point(r, r));
            box.expand(center - Point(r, r));
        }
        double stage_cell = cell;
        const double budget_cells = 4.0e6;
        const double need = (box.width() + 8 * cell) * (box.height() + 8 * cell);
        if (need / (stage_cell * stage_cell) > budget_cells)
            stage_cell = std::sqrt(need / budget_cells);
        const GridSpec grid = grid_fitting(box, stage_cell);
        out.measured_area += sweep(frame_movement, turned, 2, grid).area();
        out.band_allowance += 4.0 * stage_cell * (stage.path_length + needle_len);
    }

    if (have_tree) out.tree_union_area = tree_mask.area();
    out.measured_area += out.tree_union_area;
    if (tree_mask_out && have_tree) *tree_mask_out = std::move(tree_mask);
    return out;
}

NeedleReversal needle_reversal_schedule(double eps, double cell) {
    if (!(eps > 0.0)) throw InvalidArgumentError("needle reversal requires eps > 0");
    NeedleReversal out;
    const long k = std::clamp(3L + (long)std::ceil(std::log2(1.0 / eps)), 2L, 8L);
    out.tree_depth = k;
    const long pieces_per_tree = 1L << k;

    const CanonicalTree& canon = canonical_sector_tree(k);
    // Needle length: the rotation sweeps stay inside the three trees, whose
    // total area scales with the square of the needle length.
    const double rotation_budget = 0.55 * eps;
    const double lambda = std::min(0.98, std::sqrt(rotation_budget / (3.0 * canon.union_area)));
    out.needle_length = lambda;

    // Plan the piece rays of the three trees (60 degrees each), scaled by
    // lambda and rotated by 60 degrees per tree about the origin.
    std::vector<PlannedRay> rays;
    rays.reserve(size_t(3 * pieces_per_tree));
    for (int tree = 0; tree < 3; ++tree) {
        const Point spin = unit_from_angle(double(tree) * M_PI / 3.0);
        for (long i = 0; i < pieces_per_tree; ++i) {
            const FramePiece& p = canon.pieces[size_t(i)];
            PlannedRay ray;
            ray.apex = lambda * spin * Point(p.apex_x, 1.0);
            // Ray directions of the original elementary triangle (translation
            // within the tree does not change them).
            const double step = canon.base / double(pieces_per_tree);
            const double xl = step * double(i), xr = step * double(i + 1);
            ray.angle_from = std::atan2(-1.0, xl - canon.apex_x) + double(tree) * M_PI / 3.0;
            ray.angle_to = std::atan2(-1.0, xr - canon.apex_x) + double(tree) * M_PI / 3.0;
            rays.push_back(ray);
        }
    }

    auto needle_at = [&](const PlannedRay& ray, double angle) {
        return SegmentPrim{ray.apex, ray.apex + lambda * unit_from_angle(angle)};
    };

    // Join lateral distances, for the sqrt-weighted tilt budget split: the
    // total slide length (sum d/theta) is minimized by theta proportional to
    // sqrt(d) under a fixed sum of tilt areas.
    std::vector<double> laterals;
    for (size_t j = 0; j + 1 < rays.size(); ++j) {
        const SegmentPrim from = needle_at(rays[j], rays[j].angle_to);
        const SegmentPrim to = needle_at(rays[j + 1], rays[j + 1].angle_from);
        const Point e = unit_from_angle(rays[j].angle_to);
        laterals.push_back(std::abs(cross(e, to.a - from.a)));
    }
    const SegmentPrim start = needle_at(rays.front(), rays.front().angle_from);
    const SegmentPrim reversed_start{start.b, start.a};
    {
        const SegmentPrim last = needle_at(rays.back(), rays.back().angle_to);
        const Point e = unit_from_angle(rays.back().angle_to);
        laterals.push_back(std::abs(cross(e, reversed_start.a - last.a)));
    }
    double sqrt_sum = 0.0;
    for (double d : laterals) sqrt_sum += std::sqrt(std::max(d, 0.0));
    const double join_budget = 0.3 * eps;

    auto tilt_for = [&](size_t j) {
        if (laterals[j] <= 1e-12 || sqrt_sum <= 0.0) return 1e-6;
        const double share = join_budget * std::sqrt(laterals[j]) / sqrt_sum;
        return std::clamp(share / (lambda * lambda), 1e-6, M_PI / 3.0);
    };

    NeedleSchedule schedule;
    schedule.total_area_budget = eps;
    schedule.start_pose = start;
    for (size_t j = 0; j < rays.size(); ++j) {
        const PlannedRay& ray = rays[j];
        ScheduleStage rotate;
        rotate.scene = Scene(Primitive(needle_at(ray, ray.angle_from)));
        rotate.movement = rotation_movement(ray.apex, ray.angle_to - ray.angle_from);
        rotate.label = "rotate-in-piece";
        rotate.in_tree = true;
        rotate.path_length = std::abs(ray.angle_to - ray.angle_from) * lambda;
        schedule.stages.push_back(std::move(rotate));

        const SegmentPrim from = needle_at(ray, ray.angle_to);
        const SegmentPrim to =
            j + 1 < rays.size() ? needle_at(rays[j + 1], rays[j + 1].angle_from) : reversed_start;
        for (auto& stage : join_parallel(from, to, tilt_for(j)))
            schedule.stages.push_back(std::move(stage));
    }

    out.measurement = measure_schedule(schedule, cell);
    out.schedule = std::move(schedule);

    const SegmentPrim end = out.schedule.end_pose();
    const double reversal_error =
        std::max(std::abs(end.a - reversed_start.a), std::abs(end.b - reversed_start.b));

    out.report.name = "needle_reversal";
    out.report.measured["eps"] = eps;
    out.report.measured["needle_length"] = lambda;
    out.report.measured["tree_depth"] = double(k);
    out.report.measured["stages"] = double(out.measurement.stage_count);
    out.report.measured["measured_area"] = out.measurement.measured_area;
    out.report.measured["tree_union_area"] = out.measurement.tree_union_area;
    out.report.measured["band_allowance"] = out.measurement.band_allowance;
    out.report.measured["pose_mismatch"] = out.schedule.pose_mismatch();
    out.report.add_check("area_within_eps_plus_band", out.measurement.measured_area,
                         eps + out.measurement.band_allowance, 0.0);
    out.report.add_check("end_pose_reversed", reversal_error, 0.0, 1e-9);
    out.report.add_check("poses_compatible", out.schedule.pose_mismatch(), 0.0, 1e-9);
    return out;
}

// ---------------------------------------------------------------------------
// Dimension-2 example
// ---------------------------------------------------------------------------

Scene dimension2_example(const CantorSpec& radial, const CantorSpec& vertical) {
    if (radial.lo < 1.0 - 1e-9 || radial.hi > 2.0 + 1e-9)
        throw InvalidArgumentError("radial Cantor spec must live inside [1, 2]");
    if (vertical.lo < -1e-9 || vertical.hi > 0.5 + 1e-9)
        throw InvalidArgumentError("vertical Cantor spec must live inside [0, 1/2]");

    Scene scene;
    for (const auto& [r0, r1] : radial.intervals()) {
        for (const auto& [y0, y1] : vertical.intervals()) {
            // Patch {x > 0, y in [y0,y1], r in [r0,r1]}; both circular edges
            // are graphs x = sqrt(r^2 - y^2) over the y-interval.
            const long steps = std::clamp((long)std::ceil((y1 - y0) / 0.01), 2L, 48L);
            PolygonPrim patch;
            for (long i = 0; i <= steps; ++i) {
                const double y = y0 + (y1 - y0) * double(i) / double(steps);
                patch.vertices.push_back(Point(std::sqrt(std::max(r1 * r1 - y * y, 0.0)), y));
            }
            for (long i = steps; i >= 0; --i) {
                const double y = y0 + (y1 - y0) * double(i) / double(steps);
                patch.vertices.push_back(Point(std::sqrt(std::max(r0 * r0 - y * y, 0.0)), y));
            }
            scene.add(std::move(patch));
        }
    }
    return scene;
}

Movement dimension2_movement(const RigidMotion& alpha) {
    std::vector<Movement> segments;
    RigidMotion pose = identity_motion(); // accumulated world pose

    // World-frame stages are conjugated into the movement's pre-frame:
    // prefix o local must equal world o prefix.
    auto add_world_rotation = [&](Point center, double angle) {
        if (std::abs(angle) < 1e-15) return;
        const long parts = (long)std::floor(std::abs(angle) / M_PI) + 1;
        for (long i = 0; i < parts; ++i) {
            const RigidMotion inv_pose = inverse(pose);
            segments.push_back(
                Movement::elementary(rotation(inv_pose(center), angle / double(parts))));
            pose = compose(rotation(center, angle / double(parts)), pose);
        }
    };

    const Point c = alpha.c();
    if (std::abs(c) > 1e-15) {
        const double psi = std::atan2(c.imag(), c.real());
        add_world_rotation(Point(0.0, 0.0), psi);
        // Translation by c in the world is a translation by c / u_pose in the
        // pre-frame.
        segments.push_back(Movement::elementary(translation(c / pose.u())));
        pose = compose(translation(c), pose);
        const double chi = wrap_angle(alpha.angle() - psi);
        add_world_rotation(c, chi);
    } else {
        add_world_rotation(Point(0.0, 0.0), alpha.angle());
    }

    if (segments.empty()) return Movement::constant_identity();
    std::vector<double> breaks(segments.size() + 1);
    for (size_t i = 0; i < breaks.size(); ++i)
        breaks[i] = double(i) / double(segments.size());
    breaks.back() = 1.0;
    return Movement::piecewise(std::move(breaks), std::move(segments));
}

namespace {

void add_annulus(Scene& scene, Point center, double r0, double r1) {
    // Ring as two half-ring simple polygons.
    for (int half = 0; half < 2; ++half) {
        const double a0 = -M_PI / 2.0 + double(half) * M_PI;
        const double a1 = a0 + M_PI;
        const long steps = 96;
        PolygonPrim poly;
        for (long i = 0; i <= steps; ++i) {
            const double a = a0 + (a1 - a0) * double(i) / double(steps);
            poly.vertices.push_back(center + r1 * unit_from_angle(a));
        }
        for (long i = steps; i >= 0; --i) {
            const double a = a0 + (a1 - a0) * double(i) / double(steps);
            poly.vertices.push_back(center + r0 * unit_from_angle(a));
        }
        scene.add(std::move(poly));
    }
}

} // namespace

Scene dimension2_covering(const CantorSpec& radial, const CantorSpec& vertical,
                          const RigidMotion& alpha, double extent) {
    Scene covering;
    const Point c = alpha.c();
    const Point v = std::abs(c) > 1e-15 ? c / std::abs(c) : alpha.u();
    for (const auto& [r0, r1] : radial.intervals()) {
        add_annulus(covering, Point(0.0, 0.0), r0, r1); // B
        add_annulus(covering, c, r0, r1);               // B + c
    }
    for (const auto& [y0, y1] : vertical.intervals()) {
        RectanglePrim strip;
        strip.center = v * Point(0.0, 0.5 * (y0 + y1));
        strip.direction = v;
        strip.length = 2.0 * extent;
        strip.width = y1 - y0;
        covering.add(strip); // v * {y in F}
    }
    return covering;
}

} // namespace kakeya
