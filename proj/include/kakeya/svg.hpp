#pragma once

#include <kakeya/raster.hpp>

#include <string>

namespace kakeya {

struct SvgOverlay {
    Scene scene;
    std::string stroke = "#d62728";
};

// Renders the mask (occupied cells as row-run rectangles) with optional scene
// overlays drawn as outlines.
void write_svg(const std::string& path, const RasterMask& mask,
               const std::vector<SvgOverlay>& overlays = {});

} // namespace kakeya
