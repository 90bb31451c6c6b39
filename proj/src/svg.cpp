#include <kakeya/errors.hpp>
#include <kakeya/svg.hpp>

#include <fstream>

namespace kakeya {

namespace {

void write_polyline(std::ofstream& out, const std::vector<Point>& pts, bool close,
                    const std::string& stroke, const GridSpec& g) {
    if (pts.size() < 2) return;
    out << "<path fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1\" d=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        out << (i == 0 ? "M" : "L") << (pts[i].real() - g.xmin) / g.cell << " "
            << (g.ymax - pts[i].imag()) / g.cell;
    }
    if (close) out << "Z";
    out << "\"/>\n";
}

} // namespace

void write_svg(const std::string& path, const RasterMask& mask,
               const std::vector<SvgOverlay>& overlays) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    const GridSpec& g = mask.grid();
    const long w = mask.cols(), h = mask.rows();
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h
        << "\">\n";
    out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";

    // Occupied cells, merged per row run.
    for (long row = 0; row < h; ++row) {
        long col = 0;
        while (col < w) {
            if (!mask.get(row, col)) {
                ++col;
                continue;
            }
            long end = col;
            while (end < w && mask.get(row, end)) ++end;
            out << "<rect x=\"" << col << "\" y=\"" << (h - 1 - row) << "\" width=\""
                << (end - col) << "\" height=\"1\" fill=\"#9ecae1\"/>\n";
            col = end;
        }
    }

    for (const auto& overlay : overlays) {
        for (const auto& prim : overlay.scene.primitives) {
            std::visit(
                [&](const auto& p) {
                    using T = std::decay_t<std::remove_cvref_t<decltype(p)>>;
                    if constexpr (std::is_same_v<T, SegmentPrim>) {
                        write_polyline(out, {p.a, p.b}, false, overlay.stroke, g);
                    } else if constexpr (std::is_same_v<T, PolygonPrim>) {
                        write_polyline(out, p.vertices, true, overlay.stroke, g);
                    } else if constexpr (std::is_same_v<T, ArcPrim>) {
                        std::vector<Point> pts;
                        const long steps = 64;
                        for (long i = 0; i <= steps; ++i)
                            pts.push_back(p.center +
                                          p.radius * unit_from_angle(p.angle0 +
                                                                     p.sweep * double(i) /
                                                                         double(steps)));
                        write_polyline(out, pts, false, overlay.stroke, g);
                    } else if constexpr (std::is_same_v<T, PointCloudPrim>) {
                        for (Point q : p.points)
                            out << "<circle cx=\"" << (q.real() - g.xmin) / g.cell << "\" cy=\""
                                << (g.ymax - q.imag()) / g.cell << "\" r=\"1.5\" fill=\""
                                << overlay.stroke << "\"/>\n";
                    } else {
                        write_polyline(out, rectangle_corners(p), true, overlay.stroke, g);
                    }
                },
                prim);
        }
    }
    out << "</svg>\n";
}

} // namespace kakeya
