#include <doctest.h>

#include <kakeya/errors.hpp>
#include <kakeya/raster.hpp>
#include <kakeya/svg.hpp>

#include "test_helpers.hpp"

#include <fstream>

using namespace kakeya;

namespace {

GridSpec square_grid(double half, double cell) {
    return GridSpec{-half, -half, half, half, cell};
}

Scene unit_square() {
    return Scene(Primitive(PolygonPrim{{Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)}}));
}

} // namespace

TEST_CASE("rasterize basics") {
    SUBCASE("empty scene") {
        const RasterMask mask = rasterize(Scene{}, square_grid(1.0, 0.01));
        CHECK(mask.area() == doctest::Approx(0.0));
    }
    SUBCASE("unit square at cell 0.01") {
        const RasterMask mask = rasterize(unit_square(), square_grid(1.5, 0.01));
        CHECK(mask.area() >= 0.98);
        CHECK(mask.area() <= 1.06);
    }
    SUBCASE("a segment occupies one dilation band") {
        const Scene seg(Primitive(SegmentPrim{Point(-0.5, 0), Point(0.5, 0)}));
        const double cell = 0.01;
        const RasterMask mask = rasterize(seg, square_grid(1.0, cell));
        CHECK(mask.area() <= 3.0 * cell * 1.0);
        CHECK(mask.area() > 0.0);
    }
    SUBCASE("scene outside the grid raises") {
        CHECK_THROWS_AS(rasterize(unit_square(), square_grid(0.5, 0.01)), SceneOutOfBoundsError);
    }
}

TEST_CASE("area is count times cell squared and additive on disjoint parts") {
    const GridSpec grid = square_grid(2.0, 0.015625);
    Scene left(Primitive(PolygonPrim{{Point(-1.5, -0.25), Point(-1.0, -0.25), Point(-1.0, 0.25),
                                      Point(-1.5, 0.25)}}));
    Scene right(Primitive(PolygonPrim{{Point(1.0, -0.25), Point(1.5, -0.25), Point(1.5, 0.25),
                                       Point(1.0, 0.25)}}));
    Scene both = left;
    both.add(right.primitives.front());
    CHECK(rasterize(both, grid).count() ==
          rasterize(left, grid).count() + rasterize(right, grid).count());

    // A polygon filling the whole grid box measures the box area up to one row.
    const GridSpec box = square_grid(1.0, 0.01);
    const Scene full(Primitive(PolygonPrim{{Point(-1, -1), Point(1, -1), Point(1, 1), Point(-1, 1)}}));
    CHECK(std::abs(rasterize(full, box).area() - 4.0) <= 2.0 * (2.0 + 2.0) * 0.01);
}

TEST_CASE("grid-aligned translation leaves the cell count unchanged") {
    const double cell = 0.015625; // power of two, keeps the offsets exact
    const GridSpec grid = square_grid(2.0, cell);
    const Scene base(
        Primitive(PolygonPrim{{Point(-0.3, -0.2), Point(0.4, -0.1), Point(0.1, 0.5)}}));
    const Scene moved = transformed(base, translation(Point(32 * cell, -16 * cell)));
    CHECK(rasterize(base, grid).count() == rasterize(moved, grid).count());
}

TEST_CASE("area changes boundedly under grid refinement") {
    const Scene tri(
        Primitive(PolygonPrim{{Point(-0.8, -0.5), Point(0.7, -0.3), Point(0.0, 0.9)}}));
    double perimeter = 0.0;
    {
        const auto& poly = std::get<PolygonPrim>(tri.primitives.front());
        for (size_t i = 0; i < poly.vertices.size(); ++i)
            perimeter +=
                std::abs(poly.vertices[(i + 1) % poly.vertices.size()] - poly.vertices[i]);
    }
    double cell = 0.04;
    double prev = rasterize(tri, square_grid(1.5, cell)).area();
    for (int i = 0; i < 3; ++i) {
        cell /= 2.0;
        const double next = rasterize(tri, square_grid(1.5, cell)).area();
        CHECK(std::abs(next - prev) <= perimeter * 2.0 * (2.0 * cell));
        prev = next;
    }
}

TEST_CASE("sweep") {
    SUBCASE("constant identity equals plain rasterization") {
        const GridSpec grid = square_grid(1.5, 0.01);
        const RasterMask swept = sweep(Movement::constant_identity(), unit_square(), 4, grid);
        const RasterMask plain = rasterize(unit_square(), grid);
        CHECK(swept.count() == plain.count());
        CHECK(swept.subset_within(plain, 0));
    }
    SUBCASE("unit segment under a unit perpendicular translation sweeps a square") {
        const Scene seg(Primitive(SegmentPrim{Point(0, 0), Point(1, 0)}));
        const Movement up = elementary_movement(translation(Point(0, 1)));
        const RasterMask mask = sweep(up, seg, 2, square_grid(1.5, 0.005));
        CHECK(mask.area() == doctest::Approx(1.0).epsilon(0.05));
    }
    SUBCASE("rotating concentric circles about their center covers only a band") {
        const double r = 0.8, cell = 0.005;
        const Scene circle(Primitive(ArcPrim{Point(0, 0), r, 0.0, 2.0 * M_PI}));
        const Movement spin = elementary_movement(rotation(Point(0, 0), 2.5));
        const RasterMask mask = sweep(spin, circle, 2, square_grid(1.0, cell));
        CHECK(mask.area() <= 3.0 * cell * 2.0 * M_PI * r);
    }
    SUBCASE("monotone in the scene") {
        const Scene small(Primitive(SegmentPrim{Point(0, 0), Point(0.5, 0)}));
        Scene big = small;
        big.add(SegmentPrim{Point(0, 0.2), Point(0.5, 0.4)});
        const Movement move = elementary_movement(translation(Point(0.3, 0.6)));
        const GridSpec grid = square_grid(1.5, 0.01);
        CHECK(sweep(move, small, 4, grid).subset_within(sweep(move, big, 4, grid), 0));
    }
    SUBCASE("doubling the requested steps never loses cells") {
        const Scene seg(Primitive(SegmentPrim{Point(-0.4, 0), Point(0.4, 0)}));
        const Movement spin = elementary_movement(rotation(Point(0, 0), 1.0));
        const GridSpec grid = square_grid(1.0, 0.02);
        const RasterMask coarse = sweep(spin, seg, 100, grid);
        const RasterMask fine = sweep(spin, seg, 200, grid);
        CHECK(coarse.subset_within(fine, 0));
        CHECK(fine.count() >= coarse.count());
    }
    SUBCASE("orbit leaving the grid raises") {
        const Scene seg(Primitive(SegmentPrim{Point(0, 0), Point(0.5, 0)}));
        const Movement far_move = elementary_movement(translation(Point(5, 0)));
        CHECK_THROWS_AS(sweep(far_move, seg, 4, square_grid(1.0, 0.01)), SceneOutOfBoundsError);
    }
}

TEST_CASE("scanline polygon rasterization matches the distance predicate") {
    kakeya::testing::Rng rng(71);
    std::uniform_real_distribution<double> coord(-0.8, 0.8);
    const GridSpec grid = square_grid(1.2, 0.025);
    const double r = grid.cell / std::sqrt(2.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Point> pts;
        for (int i = 0; i < 12; ++i) pts.push_back(Point(coord(rng), coord(rng)));
        const PolygonPrim poly{convex_hull(pts)};
        if (poly.vertices.size() < 3) continue;
        const RasterMask mask = rasterize(Scene(Primitive(poly)), grid);
        long disagreements = 0;
        for (long row = 0; row < grid.rows(); ++row)
            for (long col = 0; col < grid.cols(); ++col) {
                const bool expected =
                    distance_to(Primitive(poly), grid.cell_center(row, col)) <= r;
                if (expected != mask.get(row, col)) ++disagreements;
            }
        CHECK(disagreements == 0);
    }
}

TEST_CASE("translation fast path agrees with the sampled union") {
    Scene scene;
    scene.add(SegmentPrim{Point(-0.4, -0.1), Point(0.1, 0.3)});
    scene.add(RectanglePrim{Point(0.3, -0.3), Point(0.8, 0.6), 0.4, 0.15});
    const Point c(0.9, 0.5);
    const GridSpec grid = square_grid(1.8, 0.02);
    const RasterMask fast = sweep(Movement::elementary(translation(c)), scene, 2, grid);

    RasterMask sampled(grid);
    const long steps = 200; // displacement per step well below one cell
    for (long i = 0; i <= steps; ++i)
        rasterize_into(sampled,
                       transformed(scene, translation((double(i) / double(steps)) * c)));

    CHECK(sampled.subset_within(fast, 0)); // every sampled position is in the hull
    CHECK(fast.subset_within(sampled, 1)); // and the hull adds at most one band
}

TEST_CASE("on-center arc rotation fast path agrees with the sampled union") {
    const Point center(0.1, -0.2);
    const Scene arc(Primitive(ArcPrim{center, 0.7, 0.4, 1.1}));
    const double angle = 1.3;
    const GridSpec grid = square_grid(1.5, 0.02);
    const RasterMask fast = sweep(Movement::elementary(rotation(center, angle)), arc, 2, grid);

    RasterMask sampled(grid);
    const long steps = 120;
    for (long i = 0; i <= steps; ++i)
        rasterize_into(sampled,
                       transformed(arc, rotation(center, angle * double(i) / double(steps))));

    CHECK(sampled.subset_within(fast, 0));
    CHECK(fast.subset_within(sampled, 1));
}

TEST_CASE("neighborhood dilation") {
    const GridSpec grid = square_grid(0.5, 0.01);
    RasterMask mask(grid);
    mask.set(grid.row_of(0.0), grid.col_of(0.0));

    SUBCASE("zero radius is the identity") {
        const RasterMask same = neighborhood(mask, 0.0);
        CHECK(same.count() == mask.count());
        CHECK(same.subset_within(mask, 0));
    }
    SUBCASE("a single cell dilates to a disc") {
        const double eps = 0.1; // 10 cells
        const RasterMask disc = neighborhood(mask, eps);
        CHECK(disc.area() == doctest::Approx(M_PI * eps * eps).epsilon(0.15));
    }
    SUBCASE("monotone in the radius") {
        const RasterMask small = neighborhood(mask, 0.03);
        const RasterMask large = neighborhood(mask, 0.07);
        CHECK(small.subset_within(large, 0));
    }
}

TEST_CASE("connected components") {
    const GridSpec grid = square_grid(1.2, 0.01);
    const RasterMask domain = disc_mask(grid, Point(0, 0), 1.0);

    SUBCASE("empty obstacle gives one component") {
        const ComponentLabeling labels = connected_components(domain, RasterMask(grid));
        CHECK(labels.count == 1);
    }
    SUBCASE("a full-width bar splits the disc in two") {
        const Scene bar(Primitive(RectanglePrim{Point(0, 0), Point(0, 1), 2.4, 0.1}));
        const ComponentLabeling labels = connected_components(domain, rasterize(bar, grid));
        CHECK(labels.count == 2);
    }
    SUBCASE("an annulus separates inside from outside") {
        Scene ring;
        ring.add(ArcPrim{Point(0, 0), 0.5, 0.0, 2.0 * M_PI});
        const RasterMask ring_mask = neighborhood(rasterize(ring, grid), 0.02);
        const ComponentLabeling labels = connected_components(domain, ring_mask);
        CHECK(labels.count == 2);
    }
    SUBCASE("grids must match") {
        const RasterMask other(square_grid(1.0, 0.01));
        CHECK_THROWS_AS(connected_components(domain, other), GridMismatchError);
    }
}

TEST_CASE("svg export renders cells and overlays") {
    const GridSpec grid = square_grid(0.5, 0.01);
    const Scene seg(Primitive(SegmentPrim{Point(-0.3, 0), Point(0.3, 0.2)}));
    const std::string path = "test_mask_out.svg";
    write_svg(path, rasterize(seg, grid), {{seg, "#d62728"}});
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("<rect") != std::string::npos);
    CHECK(text.find("<path") != std::string::npos);
    remove(path.c_str());
}

TEST_CASE("pgm export writes a valid header") {
    const GridSpec grid = square_grid(0.1, 0.01);
    RasterMask mask(grid);
    mask.set(3, 4);
    const std::string path = "test_mask_out.pgm";
    write_pgm(path, mask);
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    char magic[3] = {0};
    REQUIRE(fscanf(f, "%2s", magic) == 1);
    CHECK(std::string(magic) == "P5");
    fclose(f);
    remove(path.c_str());
}
