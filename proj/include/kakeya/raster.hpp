#pragma once

#include <kakeya/movement.hpp>
#include <kakeya/scene.hpp>

#include <cstdint>
#include <vector>

namespace kakeya {

// Occupancy grid geometry: axis-aligned box split into square cells.
struct GridSpec {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 1.0;
    double ymax = 1.0;
    double cell = 0.01;

    long cols() const { return (long)std::ceil((xmax - xmin) / cell - 1e-9); }
    long rows() const { return (long)std::ceil((ymax - ymin) / cell - 1e-9); }

    Point cell_center(long row, long col) const {
        return Point(xmin + (double(col) + 0.5) * cell, ymin + (double(row) + 0.5) * cell);
    }

    long col_of(double x) const { return (long)std::floor((x - xmin) / cell); }
    long row_of(double y) const { return (long)std::floor((y - ymin) / cell); }

    Box box() const { return Box{xmin, ymin, xmax, ymax}; }

    bool same_geometry(const GridSpec& o, double tol = 1e-9) const {
        return std::abs(xmin - o.xmin) <= tol && std::abs(ymin - o.ymin) <= tol &&
               std::abs(xmax - o.xmax) <= tol && std::abs(ymax - o.ymax) <= tol &&
               std::abs(cell - o.cell) <= tol;
    }
};

// Fit a grid around a box with some padding cells.
GridSpec grid_fitting(const Box& box, double cell, long pad_cells = 4);

// Bit mask over a grid, row-major.
class RasterMask {
public:
    RasterMask() = default;
    explicit RasterMask(const GridSpec& grid)
        : grid_(grid), rows_(grid.rows()), cols_(grid.cols()),
          bits_(size_t(rows_ * cols_), uint8_t(0)) {}

    const GridSpec& grid() const { return grid_; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }

    bool get(long row, long col) const {
        if (row < 0 || col < 0 || row >= rows_ || col >= cols_) return false;
        return bits_[size_t(row * cols_ + col)] != 0;
    }
    void set(long row, long col) {
        if (row < 0 || col < 0 || row >= rows_ || col >= cols_) return;
        bits_[size_t(row * cols_ + col)] = 1;
    }

    const std::vector<uint8_t>& data() const { return bits_; }

    long count() const;
    double area() const { return double(count()) * grid_.cell * grid_.cell; }

    void unite(const RasterMask& o);          // bitwise or (same grid)
    RasterMask intersect(const RasterMask& o) const;
    RasterMask subtract(const RasterMask& o) const;

    // True when every set cell has a set cell of `other` within Chebyshev
    // distance `band_cells`.
    bool subset_within(const RasterMask& other, long band_cells = 0) const;

    // Number of set cells with no set cell of `other` within the band.
    long uncovered_count(const RasterMask& other, long band_cells = 0) const;

private:
    void require_same_grid(const RasterMask& o) const;

    GridSpec grid_;
    long rows_ = 0;
    long cols_ = 0;
    std::vector<uint8_t> bits_;
};

// A cell is set iff its center lies within cell/sqrt(2) of the scene
// (dilation by one half cell diagonal, so discrete areas over-report).
RasterMask rasterize(const Scene& scene, const GridSpec& grid);
void rasterize_into(RasterMask& mask, const Scene& scene);

double area(const RasterMask& mask);

// Union over sampled t of rasterize(M_t(scene)). The time step is refined
// until the largest per-step displacement of any scene point is at most one
// cell; straight translation paths of convex primitives are swept in closed
// form (their swept region is again convex).
RasterMask sweep(const Movement& movement, const Scene& scene, long time_steps,
                 const GridSpec& grid);

// Morphological dilation by a disc of radius eps (cell-center metric).
RasterMask neighborhood(const RasterMask& mask, double eps);

struct ComponentLabeling {
    GridSpec grid;
    long count = 0;
    std::vector<int32_t> labels; // row-major; -1 outside domain\obstacle
    std::vector<long> sizes;

    int32_t label_at(long row, long col) const;
};

// 4-connected components of the clear region domain AND NOT obstacle.
ComponentLabeling connected_components(const RasterMask& domain, const RasterMask& obstacle);

// Filled disc mask (cells within cell/sqrt(2) of the closed disc).
RasterMask disc_mask(const GridSpec& grid, Point center, double radius);

void write_pgm(const std::string& path, const RasterMask& mask);

} // namespace kakeya
