#pragma once

// Frozen measurements of the shipped constructions. Recorded once from the
// construction oracle and pinned; regenerate with
//   kakeya perron --k 5 --cell 1e-3
// if the construction is deliberately changed.
namespace kakeya::goldens {

// Raster union area of the depth-5 Perron tree of the unit-base height-1
// triangle at cell 1e-3.
inline constexpr double kPerronK5UnionArea = 0.173181;
inline constexpr double kPerronGoldenTolerance = 0.02; // +-2 percent

} // namespace kakeya::goldens
