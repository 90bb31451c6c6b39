#include <doctest.h>

#include <kakeya/errors.hpp>
#include <kakeya/venetian.hpp>

using namespace kakeya;

namespace {

std::vector<RectangleSystem> build_generations(long count) {
    const BlindParams params = default_blind_params(count);
    std::vector<RectangleSystem> gens{init_blind(params)};
    for (long s = 0; s + 1 < count; ++s)
        gens.push_back(refine(gens.back(), params.directions[size_t(s + 1)],
                              params.slat_counts[size_t(s)], params.widths[size_t(s + 1)]));
    return gens;
}

} // namespace

TEST_CASE("init_blind seeds one rectangle with shadow below one") {
    const BlindParams params = default_blind_params(4);
    const RectangleSystem sys = init_blind(params);
    CHECK(sys.rectangles.size() == 1);
    CHECK(sys.generation == 1);
    CHECK(projection_measure(sys, params.directions[0]) < 1.0);
    CHECK(projection_measure(sys, params.directions[0]) ==
          doctest::Approx(params.widths[0]).epsilon(1e-12));
    // A set with interior has a distance set of positive measure everywhere.
    CHECK(distance_set_measure(sys, Point(5, 5)) > 0.0);
}

TEST_CASE("invalid blind parameters are rejected") {
    BlindParams params = default_blind_params(3);
    SUBCASE("widths must decrease") {
        params.widths[1] = params.widths[0];
        CHECK_THROWS_AS(init_blind(params), InvalidArgumentError);
    }
    SUBCASE("first width below one") {
        params.widths[0] = 1.0;
        CHECK_THROWS_AS(init_blind(params), InvalidArgumentError);
    }
    SUBCASE("directions distinct") {
        params.directions[2] = params.directions[1];
        CHECK_THROWS_AS(init_blind(params), InvalidArgumentError);
    }
}

TEST_CASE("refine replaces each parent by contained slats") {
    const auto gens = build_generations(3);
    CHECK(gens[1].rectangles.size() == 3);
    CHECK(gens[2].rectangles.size() == 9);
    for (size_t g = 1; g < gens.size(); ++g)
        for (size_t i = 0; i < gens[g].rectangles.size(); ++i)
            CHECK(rectangle_contains(gens[g - 1].rectangles[i / 3], gens[g].rectangles[i], 1e-9));
}

TEST_CASE("refine rejects slats that cannot fit") {
    const BlindParams params = default_blind_params(2);
    const RectangleSystem sys = init_blind(params);
    CHECK_THROWS_AS(refine(sys, params.directions[1], 3, params.widths[0] * 1.1),
                    SlatsDontFitError);
    CHECK_THROWS_AS(refine(sys, params.directions[0], 3, params.widths[1]), InvalidArgumentError);
}

TEST_CASE("current-direction shadow strictly decreases and drops below 1/n") {
    const BlindParams params = default_blind_params(6);
    const auto gens = build_generations(6);
    double prev = 1e18;
    for (size_t n = 1; n <= 6; ++n) {
        const double shadow = projection_measure(gens[n - 1], params.directions[n - 1]);
        if (n >= 2) CHECK(shadow < 1.0 / double(n));
        CHECK(shadow < prev);
        prev = shadow;
    }
}

TEST_CASE("earlier-direction shadows retain at least ninety percent per step") {
    const BlindParams params = default_blind_params(5);
    const auto gens = build_generations(5);
    for (size_t n = 2; n <= 5; ++n)
        for (size_t k = 0; k + 1 < n; ++k) {
            const double before = projection_measure(gens[n - 2], params.directions[k]);
            const double after = projection_measure(gens[n - 1], params.directions[k]);
            CHECK(after >= 0.9 * before);
            CHECK(after <= before + 1e-12); // children are contained in parents
        }
}

TEST_CASE("projection measure basics") {
    RectangleSystem sys;
    sys.direction = Point(1, 0);
    sys.limit_direction = Point(1, 0);
    sys.rectangles.push_back(RectanglePrim{Point(0, 0), Point(1, 0), 1.0, 1.0});

    SUBCASE("unit square shadow lies between 1 and sqrt(2)") {
        for (double ang : {0.0, 0.3, 0.7, 1.2, 2.0}) {
            const double s = projection_measure(sys, unit_from_angle(ang));
            CHECK(s >= 1.0 - 1e-12);
            CHECK(s <= std::sqrt(2.0) + 1e-12);
        }
    }
    SUBCASE("disjoint shadows add") {
        sys.rectangles.push_back(RectanglePrim{Point(0, 5), Point(1, 0), 1.0, 1.0});
        CHECK(projection_measure(sys, Point(1, 0)) == doctest::Approx(2.0));
    }
    SUBCASE("translating the whole system preserves the shadow") {
        RectangleSystem moved = sys;
        for (auto& r : moved.rectangles) r.center += Point(17.25, -3.5);
        for (double ang : {0.1, 0.9, 1.7})
            CHECK(projection_measure(moved, unit_from_angle(ang)) ==
                  doctest::Approx(projection_measure(sys, unit_from_angle(ang))).epsilon(1e-12));
    }
}

TEST_CASE("distance set measure") {
    RectangleSystem sys;
    sys.rectangles.push_back(RectanglePrim{Point(0, 0), Point(1, 0), 2.0, 0.5});

    SUBCASE("far probe on the axis sees a positive interval") {
        const double m = distance_set_measure(sys, Point(5, 0));
        CHECK(m > 0.0);
        // [dist to near edge, dist to far corner] = [4, sqrt(36 + 1/16)]
        CHECK(m == doctest::Approx(std::hypot(6.0, 0.25) - 4.0).epsilon(1e-12));
    }
    SUBCASE("probe inside starts the interval at zero") {
        const Point p(0.2, 0.1);
        double far_corner = 0.0;
        for (Point c : rectangle_corners(sys.rectangles[0]))
            far_corner = std::max(far_corner, std::abs(c - p));
        CHECK(distance_set_measure(sys, p) == doctest::Approx(far_corner).epsilon(1e-9));
    }
}

TEST_CASE("distance sets retain half their entry value at nearby probes") {
    const auto gens = build_generations(4);
    for (long n = 1; n <= 4; ++n) {
        for (long ix = -2; ix <= 2; ++ix) {
            for (long iy = -2; iy <= 2; ++iy) {
                const Point p(double(ix) * double(n) / (2.0 * std::sqrt(2.0)),
                              double(iy) * double(n) / (2.0 * std::sqrt(2.0)));
                const double entry = distance_set_measure(gens[size_t(n - 1)], p);
                for (size_t m = size_t(n); m < gens.size(); ++m)
                    CHECK(distance_set_measure(gens[m], p) >= 0.5 * entry);
            }
        }
    }
}

TEST_CASE("generation masks nest") {
    const auto gens = build_generations(3);
    const GridSpec grid{-0.8, -0.8, 0.8, 0.8, 0.004};
    RasterMask previous = rasterize(gens[0].scene(), grid);
    for (size_t g = 1; g < gens.size(); ++g) {
        const RasterMask current = rasterize(gens[g].scene(), grid);
        CHECK(current.subset_within(previous, 1));
        previous = current;
    }
}

TEST_CASE("blind mover slides within a slab of the shadow") {
    const auto gens = build_generations(3);
    SUBCASE("generation 1") {
        const auto res = blind_mover(gens[0], 1.0, 1e-3);
        CHECK(res.report.pass());
        CHECK(motion_distance(res.movement.end(),
                              translation(gens[0].limit_direction)) < 1e-12);
    }
    SUBCASE("generation 3 sweeps less than the shadow slab") {
        const auto res = blind_mover(gens[2], 1.0, 1e-3);
        CHECK(res.report.pass());
        const double shadow = res.report.measured.at("shadow");
        const double band = res.report.measured.at("band");
        const double caps = res.report.measured.at("caps");
        CHECK(res.report.measured.at("sweep_area") <= shadow * 1.0 + caps + band);
    }
    SUBCASE("zero distance reduces to the rasterized system") {
        const auto res = blind_mover(gens[1], 0.0, 2e-3);
        const GridSpec grid{-0.8, -0.8, 0.8, 0.8, 2e-3};
        CHECK(res.report.measured.at("sweep_area") ==
              doctest::Approx(rasterize(gens[1].scene(), grid).area()).epsilon(0.05));
    }
}
