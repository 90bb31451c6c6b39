#include <doctest.h>

#include <kakeya/errors.hpp>
#include <kakeya/topology.hpp>

#include "test_helpers.hpp"

using namespace kakeya;
using kakeya::testing::Rng;

namespace {

Polyline closed_square() {
    return Polyline{{Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)}, true};
}

Polyline random_closed_polyline(Rng& rng) {
    std::uniform_int_distribution<int> count(6, 40);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    Polyline out;
    out.closed = true;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) out.vertices.push_back(Point(coord(rng), coord(rng)));
    return out;
}

} // namespace

TEST_CASE("winding number around simple shapes") {
    CHECK(winding_number(closed_square(), Point(0.1, 0.1)) == doctest::Approx(2.0 * M_PI));
    CHECK(winding_number(closed_square(), Point(5, 5)) == doctest::Approx(0.0));
    // Open semicircle from (1,0) to (-1,0) through (0,1): half a turn about 0.
    Polyline semi;
    for (int i = 0; i <= 64; ++i)
        semi.vertices.push_back(unit_from_angle(M_PI * double(i) / 64.0));
    CHECK(winding_number(semi, Point(0, 0)) == doctest::Approx(M_PI).epsilon(1e-9));
}

TEST_CASE("winding number rejects points on the curve") {
    CHECK_THROWS_AS(winding_number(closed_square(), Point(0.5, 0.0)), PointOnCurveError);
}

TEST_CASE("closed winding numbers are integer turns") {
    Rng rng(41);
    std::uniform_real_distribution<double> coord(-2.5, 2.5);
    int tested = 0;
    while (tested < 200) {
        const Polyline gamma = random_closed_polyline(rng);
        const Point p(coord(rng), coord(rng));
        try {
            const double w = winding_number(gamma, p);
            const double turns = w / (2.0 * M_PI);
            CHECK(std::abs(turns - std::round(turns)) < 1e-9);
            ++tested;
        } catch (const PointOnCurveError&) {
        }
    }
}

TEST_CASE("winding numbers add under concatenation and negate under reversal") {
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        Polyline first, second;
        std::uniform_real_distribution<double> coord(-1.5, 1.5);
        for (int k = 0; k < 6; ++k) first.vertices.push_back(Point(coord(rng), coord(rng)));
        second.vertices.push_back(first.vertices.back());
        for (int k = 0; k < 6; ++k) second.vertices.push_back(Point(coord(rng), coord(rng)));
        const Point p(2.8, 2.8);
        const Polyline chain = concatenated(first, second);
        CHECK(std::abs(winding_number(chain, p) -
                       (winding_number(first, p) + winding_number(second, p))) < 1e-12);
        CHECK(std::abs(winding_number(reversed(first), p) + winding_number(first, p)) < 1e-12);
    }
}

TEST_CASE("winding number of a disc boundary about an outside point is zero") {
    Polyline circle;
    circle.closed = true;
    for (int i = 0; i < 128; ++i)
        circle.vertices.push_back(0.7 * unit_from_angle(2.0 * M_PI * double(i) / 128.0));
    CHECK(winding_number(circle, Point(2, 0)) == doctest::Approx(0.0));
    CHECK(winding_number(circle, Point(0.1, -0.2)) == doctest::Approx(2.0 * M_PI));
}

TEST_CASE("separation witness") {
    // Two half circles around the origin forming a full loop.
    Polyline upper, lower;
    for (int i = 0; i <= 32; ++i)
        upper.vertices.push_back(unit_from_angle(M_PI * double(i) / 32.0));
    for (int i = 0; i <= 32; ++i)
        lower.vertices.push_back(unit_from_angle(M_PI + M_PI * double(i) / 32.0));
    // curve1 = upper half (1 -> -1); curve2 = reversed lower half (1 -> -1).
    Polyline lower_reversed = reversed(lower);

    SUBCASE("inside vs outside separates") {
        const auto w = separation_witness(upper, lower_reversed, Point(0, 0), Point(3, 0));
        CHECK(w.separated);
        CHECK(std::abs(w.winding_a) == doctest::Approx(2.0 * M_PI));
        CHECK(w.winding_b == doctest::Approx(0.0));
    }
    SUBCASE("both outside does not separate") {
        const auto w = separation_witness(upper, lower_reversed, Point(3, 0), Point(0, 3));
        CHECK_FALSE(w.separated);
    }
    SUBCASE("both inside does not separate") {
        const auto w =
            separation_witness(upper, lower_reversed, Point(0.1, 0), Point(-0.1, 0.1));
        CHECK_FALSE(w.separated);
    }
}

TEST_CASE("obstruction coverage scenario") {
    ObstructionCase scenario;
    scenario.disc_center = Point(0, 0);
    scenario.disc_radius = 1.0;
    scenario.obstacle = Scene(Primitive(RectanglePrim{Point(0, 0), Point(0, 1), 2.2, 0.15}));
    Scene probe;
    {
        PolygonPrim blob;
        for (int i = 0; i < 16; ++i)
            blob.vertices.push_back(Point(-0.5, 0) +
                                    0.1 * unit_from_angle(2.0 * M_PI * double(i) / 16.0));
        probe.add(std::move(blob));
    }
    scenario.probe = probe;
    const GridSpec grid{-2.5, -1.15, 1.15, 1.15, 0.005};

    SUBCASE("bar in a disc: distinct components force coverage") {
        scenario.movement = elementary_movement(translation(Point(-1.2, 0)));
        scenario.t_end = 1.0;
        const auto report = obstruction_coverage(scenario, grid);
        CHECK(report.component_count == 2);
        CHECK(report.hypothesis_met);
        CHECK(report.covered);
        CHECK(report.uncovered_cells == 0);
        CHECK(report.probe_cells > 0);
    }
    SUBCASE("identity movement keeps the probe in place") {
        scenario.movement = Movement::constant_identity();
        const auto report = obstruction_coverage(scenario, grid);
        CHECK_FALSE(report.hypothesis_met);
        CHECK(report.component_start == report.component_end);
    }
    SUBCASE("orbiting within one component requires no coverage") {
        // Small central blob obstacle; the probe pullback slides within the
        // same component.
        scenario.obstacle = Scene(Primitive(RectanglePrim{Point(0.4, 0), Point(1, 0), 0.2, 0.2}));
        scenario.movement = elementary_movement(translation(Point(0, -0.4)));
        const auto report = obstruction_coverage(scenario, grid);
        CHECK(report.component_count == 1);
        CHECK_FALSE(report.hypothesis_met);
    }
    SUBCASE("a pullback leaving the disc is an error, not a verdict") {
        scenario.movement = elementary_movement(translation(Point(-2.5, 0)));
        CHECK_THROWS_AS(obstruction_coverage(scenario, grid), TrajectoryEscapeError);
    }
}

TEST_CASE("classification of sampled components") {
    Rng rng(43);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SUBCASE("points on a circle") {
        std::vector<Point> pts;
        for (int i = 0; i < 100; ++i)
            pts.push_back(Point(0.5, -1) + 2.0 * unit_from_angle(2.0 * M_PI * unit(rng)));
        const auto c = classify_component(pts, 1e-3 * 4.0);
        CHECK(c.kind == ComponentClass::Circle);
        CHECK(std::abs(c.circle_radius - 2.0) < 1e-6);
    }
    SUBCASE("collinear points") {
        std::vector<Point> pts;
        for (int i = 0; i < 100; ++i)
            pts.push_back(Point(-1, 2) + unit(rng) * Point(3, 1));
        CHECK(classify_component(pts, 1e-3 * 3.2).kind == ComponentClass::SegmentLike);
    }
    SUBCASE("an arc is not a full circle") {
        std::vector<Point> pts;
        for (int i = 0; i < 100; ++i)
            pts.push_back(1.5 * unit_from_angle(0.3 + 2.0 * unit(rng)));
        CHECK(classify_component(pts, 1e-3 * 3.0).kind == ComponentClass::CircularArc);
    }
    SUBCASE("an L-shape is nontrivial") {
        std::vector<Point> pts;
        for (int i = 0; i < 50; ++i) pts.push_back(Point(unit(rng), 0));
        for (int i = 0; i < 50; ++i) pts.push_back(Point(0, unit(rng)));
        const auto c = classify_component(pts, 1e-3 * std::sqrt(2.0));
        CHECK(c.kind == ComponentClass::Nontrivial);
        CHECK(c.line_residual > 1e-3);
        CHECK(c.circle_residual > 1e-3);
    }
    SUBCASE("a single repeated point is a singleton") {
        std::vector<Point> pts(5, Point(0.25, -0.75));
        CHECK(classify_component(pts, 1e-3).kind == ComponentClass::Singleton);
    }
    SUBCASE("classification is invariant under rigid motions") {
        std::vector<Point> circle_pts, line_pts;
        for (int i = 0; i < 80; ++i) {
            circle_pts.push_back(unit_from_angle(2.0 * M_PI * unit(rng)));
            line_pts.push_back(Point(unit(rng) * 2.0 - 1.0, 0));
        }
        for (int trial = 0; trial < 10; ++trial) {
            const RigidMotion g = kakeya::testing::random_motion(rng, 5.0);
            auto moved = [&](const std::vector<Point>& pts) {
                std::vector<Point> out;
                for (Point p : pts) out.push_back(g(p));
                return out;
            };
            CHECK(classify_component(moved(circle_pts), 2e-3).kind == ComponentClass::Circle);
            CHECK(classify_component(moved(line_pts), 2e-3).kind == ComponentClass::SegmentLike);
        }
    }
}
