#include <kakeya/errors.hpp>
#include <kakeya/json_io.hpp>

#include <fstream>

namespace kakeya {

Json to_json(Point p) { return Json::array({p.real(), p.imag()}); }

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw InvalidArgumentError("expected a point as [re, im]");
    return Point(j[0].get<double>(), j[1].get<double>());
}

Json to_json(const RigidMotion& m) {
    return Json{{"u", to_json(m.u())}, {"c", to_json(m.c())}};
}

RigidMotion motion_from_json(const Json& j) {
    return RigidMotion(point_from_json(j.at("u")), point_from_json(j.at("c")));
}

Json to_json(const Movement& m) {
    if (auto desc = m.splice_description()) {
        return Json{{"kind", "spliced"},
                    {"beta", to_json(desc->beta)},
                    {"n", desc->n},
                    {"segment", to_json(*m.splice_segment())}};
    }
    if (auto table = m.sample_table()) {
        Json samples = Json::array();
        for (const auto& [t, motion] : *table) samples.push_back(Json::array({t, to_json(motion)}));
        return Json{{"kind", "sampled"}, {"samples", samples}};
    }
    if (m.is_constant_identity() || m.translation_path() || m.rotation_path()) {
        return Json{{"kind", "elementary"}, {"alpha", to_json(m.end())}};
    }
    // No closed form: emit a dense sample table.
    Json samples = Json::array();
    const long n = 256;
    for (long i = 0; i <= n; ++i) {
        const double t = double(i) / double(n);
        samples.push_back(Json::array({t, to_json(m.at(t))}));
    }
    return Json{{"kind", "sampled"}, {"samples", samples}};
}

Movement movement_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "elementary") return Movement::elementary(motion_from_json(j.at("alpha")));
    if (kind == "spliced")
        return Movement::spliced(movement_from_json(j.at("segment")),
                                 motion_from_json(j.at("beta")), j.at("n").get<long>());
    if (kind == "sampled") {
        std::vector<std::pair<double, RigidMotion>> samples;
        for (const auto& row : j.at("samples"))
            samples.push_back({row.at(0).get<double>(), motion_from_json(row.at(1))});
        return Movement::sampled(std::move(samples));
    }
    throw InvalidArgumentError("unknown movement kind: " + kind);
}

Json to_json(const Scene& scene) {
    Json prims = Json::array();
    for (const auto& prim : scene.primitives) {
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<std::remove_cvref_t<decltype(p)>>;
                if constexpr (std::is_same_v<T, SegmentPrim>) {
                    prims.push_back(
                        Json{{"type", "segment"}, {"a", to_json(p.a)}, {"b", to_json(p.b)}});
                } else if constexpr (std::is_same_v<T, PolygonPrim>) {
                    Json verts = Json::array();
                    for (Point v : p.vertices) verts.push_back(to_json(v));
                    prims.push_back(Json{{"type", "polygon"}, {"vertices", verts}});
                } else if constexpr (std::is_same_v<T, ArcPrim>) {
                    prims.push_back(Json{{"type", "arc"},
                                         {"center", to_json(p.center)},
                                         {"radius", p.radius},
                                         {"angle0", p.angle0},
                                         {"sweep", p.sweep}});
                } else if constexpr (std::is_same_v<T, PointCloudPrim>) {
                    Json pts = Json::array();
                    for (Point v : p.points) pts.push_back(to_json(v));
                    prims.push_back(Json{{"type", "points"}, {"points", pts}});
                } else {
                    prims.push_back(Json{{"type", "rectangle"},
                                         {"center", to_json(p.center)},
                                         {"direction", to_json(p.direction)},
                                         {"length", p.length},
                                         {"width", p.width}});
                }
            },
            prim);
    }
    return Json{{"primitives", prims}};
}

Scene scene_from_json(const Json& j) {
    Scene scene;
    for (const auto& p : j.at("primitives")) {
        const std::string type = p.at("type").get<std::string>();
        if (type == "segment") {
            scene.add(SegmentPrim{point_from_json(p.at("a")), point_from_json(p.at("b"))});
        } else if (type == "polygon") {
            PolygonPrim poly;
            for (const auto& v : p.at("vertices")) poly.vertices.push_back(point_from_json(v));
            if (poly.vertices.size() < 3)
                throw InvalidArgumentError("polygon needs at least 3 vertices");
            scene.add(std::move(poly));
        } else if (type == "arc") {
            ArcPrim arc;
            arc.center = point_from_json(p.at("center"));
            arc.radius = p.at("radius").get<double>();
            arc.angle0 = p.at("angle0").get<double>();
            arc.sweep = p.at("sweep").get<double>();
            if (!(arc.radius > 0.0) || !(arc.sweep > 0.0) || arc.sweep > 2.0 * M_PI + 1e-12)
                throw InvalidArgumentError("arc needs radius > 0 and sweep in (0, 2pi]");
            scene.add(arc);
        } else if (type == "points") {
            PointCloudPrim cloud;
            for (const auto& v : p.at("points")) cloud.points.push_back(point_from_json(v));
            scene.add(std::move(cloud));
        } else if (type == "rectangle") {
            RectanglePrim rect;
            rect.center = point_from_json(p.at("center"));
            rect.direction = point_from_json(p.at("direction"));
            const double n = std::abs(rect.direction);
            if (!(n > 0.0)) throw InvalidArgumentError("rectangle direction must be nonzero");
            rect.direction /= n;
            rect.length = p.at("length").get<double>();
            rect.width = p.at("width").get<double>();
            if (!(rect.length > 0.0) || !(rect.width > 0.0))
                throw InvalidArgumentError("rectangle needs positive length and width");
            scene.add(rect);
        } else {
            throw InvalidArgumentError("unknown primitive type: " + type);
        }
    }
    return scene;
}

Json to_json(const CheckReport& r) {
    return Json{{"name", r.name}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"slack", r.slack},
                {"pass", r.pass}};
}

Json to_json(const ConstructionReport& r) {
    Json measured = Json::object();
    for (const auto& [key, value] : r.measured) measured[key] = value;
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return Json{{"name", r.name}, {"measured", measured}, {"checks", checks}, {"pass", r.pass()}};
}

Json to_json(const BoundReport& r) {
    return Json{{"max_violation", r.max_violation},
                {"samples_checked", r.samples_checked},
                {"pass", r.pass}};
}

ObstructionCase obstruction_case_from_json(const Json& j) {
    ObstructionCase out;
    out.obstacle = scene_from_json(j.at("obstacle"));
    out.probe = scene_from_json(j.at("probe"));
    out.disc_center = point_from_json(j.at("disc").at("center"));
    out.disc_radius = j.at("disc").at("radius").get<double>();
    out.movement = movement_from_json(j.at("movement"));
    out.t_end = j.value("t_end", 1.0);
    if (!(out.disc_radius > 0.0)) throw InvalidArgumentError("disc radius must be positive");
    if (!(out.t_end > 0.0 && out.t_end <= 1.0))
        throw InvalidArgumentError("t_end must lie in (0, 1]");
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

} // namespace kakeya
