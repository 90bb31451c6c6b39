#include <kakeya/constructions.hpp>
#include <kakeya/errors.hpp>
#include <kakeya/json_io.hpp>
#include <kakeya/svg.hpp>
#include <kakeya/topology.hpp>
#include <kakeya/venetian.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <random>

using namespace kakeya;

namespace {

struct Output {
    std::string report_path;
    std::string svg_path;
    std::string pgm_path;
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--report", out.report_path, "write the JSON report here");
    cmd->add_option("--svg", out.svg_path, "render the swept mask as SVG");
    cmd->add_option("--pgm", out.pgm_path, "export the swept mask as binary PGM");
}

// Report skeleton: command, config echo, measured numbers, check verdicts.
Json make_report(const std::string& command, Json config, const ConstructionReport& body) {
    Json measured = Json::object();
    for (const auto& [key, value] : body.measured) measured[key] = value;
    Json checks = Json::array();
    for (const auto& c : body.checks) checks.push_back(to_json(c));
    return Json{{"command", command},
                {"config", std::move(config)},
                {"measured", measured},
                {"checks", checks},
                {"pass", body.pass()}};
}

int finish(const Json& report, const Output& out) {
    if (!out.report_path.empty()) save_json_file(out.report_path, report);
    std::cout << report.dump(2) << "\n";
    return report.at("pass").get<bool>() ? 0 : 1;
}

void maybe_write_mask(const Output& out, const RasterMask& mask,
                      const std::vector<SvgOverlay>& overlays = {}) {
    if (!out.svg_path.empty()) write_svg(out.svg_path, mask, overlays);
    if (!out.pgm_path.empty()) write_pgm(out.pgm_path, mask);
}

GridSpec auto_grid(Box box, double cell, long max_cells = 30'000'000) {
    double use = cell;
    const double need = (box.width() + 10 * cell) * (box.height() + 10 * cell);
    if (need / (use * use) > double(max_cells)) use = std::sqrt(need / double(max_cells));
    return grid_fitting(box, use);
}

ConstructionReport run_lemma_suites(uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    std::uniform_real_distribution<double> small_angle(-0.95 * M_PI, 0.95 * M_PI);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    auto random_motion = [&] {
        return RigidMotion(unit_from_angle(angle(rng)), Point(coord(rng), coord(rng)));
    };

    ConstructionReport report;
    report.name = "verify_lemmas";

    // Iterate norm identity and its lower-bound branch.
    double worst_identity = 0.0;
    long lower_branch_hits = 0;
    bool lower_ok = true;
    for (int i = 0; i < 200; ++i) {
        const RigidMotion alpha = random_motion();
        for (long n = 1; n <= 50; ++n) {
            const auto r = check_iterate_norm_identity(alpha, n);
            worst_identity = std::max(worst_identity, r.checks.front().lhs);
            if (r.checks.size() == 2) {
                ++lower_branch_hits;
                lower_ok = lower_ok && r.checks[1].pass;
            }
        }
    }
    report.measured["iterate_identity_worst"] = worst_identity;
    report.measured["iterate_lower_branch_hits"] = double(lower_branch_hits);
    report.checks.push_back({"iterate_identity", worst_identity, 0.0, 1e-9, worst_identity < 1e-9});
    report.checks.push_back({"iterate_lower_bound", lower_ok ? 0.0 : 1.0, 0.0, 0.5, lower_ok});

    // Inverse Lipschitz bound.
    bool inverse_ok = true;
    for (int i = 0; i < 500; ++i)
        inverse_ok = inverse_ok && check_inverse_lipschitz(random_motion(), random_motion()).pass();
    report.checks.push_back({"inverse_lipschitz", inverse_ok ? 0.0 : 1.0, 0.0, 0.5, inverse_ok});

    // Elementary increment bound.
    double worst_increment = 0.0;
    for (int i = 0; i < 10; ++i) {
        const RigidMotion alpha =
            RigidMotion(unit_from_angle(small_angle(rng)), Point(coord(rng), coord(rng)));
        const auto r = check_elementary_increment_bound(alpha, 24);
        worst_increment = std::max(worst_increment, r.max_violation);
    }
    report.measured["increment_worst_violation"] = worst_increment;
    report.checks.push_back(
        {"elementary_increment", worst_increment, 0.0, 1e-12, worst_increment <= 1e-12});

    // Grid identity for iterated elementary movements.
    double worst_grid = 0.0;
    for (long n : {4L, 16L, 64L}) {
        std::uniform_real_distribution<double> tiny(-M_PI / double(n) * 0.95,
                                                    M_PI / double(n) * 0.95);
        for (int i = 0; i < 10; ++i) {
            const RigidMotion alpha =
                i % 2 == 0 ? translation(Point(coord(rng), coord(rng)))
                           : rotation(Point(coord(rng), coord(rng)), tiny(rng));
            const Movement e = elementary_movement(iterate(alpha, n));
            for (long k = 1; k <= n; ++k) {
                const double d =
                    motion_distance(evaluate(e, double(k) / double(n)), iterate(alpha, k));
                worst_grid = std::max(worst_grid, d);
            }
        }
    }
    report.measured["grid_identity_worst"] = worst_grid;
    report.checks.push_back({"grid_identity", worst_grid, 0.0, 1e-10, worst_grid < 1e-10});

    // Splice distance bound.
    bool splice_ok = true;
    for (long n : {4L, 16L, 64L}) {
        const RigidMotion beta = translation(Point(0.4 / double(n), 0.2 / double(n)));
        splice_ok = splice_ok && check_splice_distance(beta, n, elementary_movement(beta)).pass;
    }
    report.checks.push_back({"splice_distance", splice_ok ? 0.0 : 1.0, 0.0, 0.5, splice_ok});
    return report;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar Kakeya-property constructions and verifications"};
    app.require_subcommand(1);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "rasterized swept region of a moving scene");
    std::string scene_path, movement_path;
    double cell = 0.01;
    long steps = 64;
    Output sweep_out;
    sweep_cmd->add_option("--scene", scene_path, "scene JSON")->required();
    sweep_cmd->add_option("--movement", movement_path, "movement JSON")->required();
    sweep_cmd->add_option("--cell", cell, "grid cell size");
    sweep_cmd->add_option("--steps", steps, "minimum time steps");
    add_output_flags(sweep_cmd, sweep_out);

    // perron
    auto* perron_cmd = app.add_subcommand("perron", "Perron tree of a triangle");
    long perron_k = 5;
    double perron_cell = 1e-3;
    Output perron_out;
    perron_cmd->add_option("--k", perron_k, "split depth (2^k pieces)");
    perron_cmd->add_option("--cell", perron_cell, "grid cell size");
    add_output_flags(perron_cmd, perron_out);

    // needle
    auto* needle_cmd = app.add_subcommand("needle", "needle reversal schedule");
    double needle_eps = 0.5, needle_cell = 1e-3;
    Output needle_out;
    needle_cmd->add_option("--eps", needle_eps, "area budget");
    needle_cmd->add_option("--cell", needle_cell, "grid cell size");
    add_output_flags(needle_cmd, needle_out);

    // paljoin
    auto* pal_cmd = app.add_subcommand("paljoin", "parallel transport of a segment");
    double pal_offset = 1.0, pal_eps = 0.1, pal_len = 1.0, pal_cell = 1e-3;
    Output pal_out;
    pal_cmd->add_option("--offset", pal_offset, "lateral offset");
    pal_cmd->add_option("--eps", pal_eps, "area budget");
    pal_cmd->add_option("--len", pal_len, "segment length");
    pal_cmd->add_option("--cell", pal_cell, "grid cell size");
    add_output_flags(pal_cmd, pal_out);

    // example-k2
    auto* dim2_cmd = app.add_subcommand("example-k2", "Hausdorff-dimension-2 example sweep");
    long dim2_depth = 2;
    double dim2_ratio = 1.0 / 3.0, dim2_cell = 2.5e-3;
    std::string alpha_path;
    Output dim2_out;
    dim2_cmd->add_option("--depth", dim2_depth, "Cantor depth");
    dim2_cmd->add_option("--ratio", dim2_ratio, "Cantor ratio in (0, 1/2)");
    dim2_cmd->add_option("--alpha", alpha_path,
                         "target motion JSON (default R(0,pi/3) after T(1,1))");
    dim2_cmd->add_option("--cell", dim2_cell, "grid cell size");
    add_output_flags(dim2_cmd, dim2_out);

    // venetian
    auto* ven_cmd = app.add_subcommand("venetian", "venetian blind construction");
    long ven_gens = 4, ven_slats = 3;
    double ven_cell = 2e-3, ven_R = 1.0;
    Output ven_out;
    ven_cmd->add_option("--generations", ven_gens, "number of generations (1..6)");
    ven_cmd->add_option("--slats", ven_slats, "slats per refinement");
    ven_cmd->add_option("--cell", ven_cell, "grid cell size");
    ven_cmd->add_option("--distance", ven_R, "mover translation distance");
    add_output_flags(ven_cmd, ven_out);

    // obstruct
    auto* obstruct_cmd = app.add_subcommand("obstruct", "component-separation coverage test");
    std::string case_path;
    double obstruct_cell = 5e-3;
    Output obstruct_out;
    obstruct_cmd->add_option("--case", case_path, "obstruction case JSON")->required();
    obstruct_cmd->add_option("--cell", obstruct_cell, "grid cell size");
    add_output_flags(obstruct_cmd, obstruct_out);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a sampled component");
    std::string points_path;
    double classify_tol = 1e-3;
    Output classify_out;
    classify_cmd->add_option("--points", points_path, "JSON array of [x,y] points")->required();
    classify_cmd->add_option("--tol", classify_tol, "tolerance as a fraction of the diameter");
    add_output_flags(classify_cmd, classify_out);

    // verify-lemmas
    auto* verify_cmd = app.add_subcommand("verify-lemmas", "randomized inequality suites");
    uint64_t seed = 7;
    Output verify_out;
    verify_cmd->add_option("--seed", seed, "random seed recorded in the report");
    add_output_flags(verify_cmd, verify_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // invalid input exits 2, --help exits 0
    }

    try {
        if (sweep_cmd->parsed()) {
            const Scene scene = scene_from_json(load_json_file(scene_path));
            const Movement movement = movement_from_json(load_json_file(movement_path));
            Box box = bounding_box(scene);
            for (int i = 0; i <= 32; ++i)
                box.expand(bounding_box(transformed(scene, movement.at(double(i) / 32.0))));
            const GridSpec grid = auto_grid(box, cell);
            const RasterMask mask = sweep(movement, scene, steps, grid);
            ConstructionReport body;
            body.name = "sweep";
            body.measured["area"] = mask.area();
            body.measured["cells"] = double(mask.count());
            maybe_write_mask(sweep_out, mask, {{scene, "#d62728"}});
            return finish(make_report("sweep",
                                      Json{{"scene", scene_path},
                                           {"movement", movement_path},
                                           {"cell", grid.cell},
                                           {"steps", steps}},
                                      body),
                          sweep_out);
        }

        if (perron_cmd->parsed()) {
            const Scene triangle(
                Primitive(PolygonPrim{{Point(0, 0), Point(1, 0), Point(0.5, 1)}}));
            const PerronTree tree = perron_tree(perron_k, triangle, perron_cell);
            if (!perron_out.svg_path.empty() || !perron_out.pgm_path.empty()) {
                const GridSpec grid = auto_grid(bounding_box(tree.scene), perron_cell);
                maybe_write_mask(perron_out, rasterize(tree.scene, grid), {{triangle, "#d62728"}});
            }
            return finish(
                make_report("perron", Json{{"k", perron_k}, {"cell", perron_cell}}, tree.report),
                perron_out);
        }

        if (needle_cmd->parsed()) {
            NeedleReversal reversal = needle_reversal_schedule(needle_eps, needle_cell);
            if (!needle_out.svg_path.empty() || !needle_out.pgm_path.empty()) {
                RasterMask tree_mask;
                measure_schedule(reversal.schedule, needle_cell, &tree_mask);
                Scene poses;
                poses.add(reversal.schedule.start_pose);
                maybe_write_mask(needle_out, tree_mask, {{poses, "#d62728"}});
            }
            return finish(make_report("needle", Json{{"eps", needle_eps}, {"cell", needle_cell}},
                                      reversal.report),
                          needle_out);
        }

        if (pal_cmd->parsed()) {
            const NeedleSchedule schedule = pal_join(pal_len, pal_offset, pal_eps);
            const ScheduleMeasurement m = measure_schedule(schedule, pal_cell);
            ConstructionReport body;
            body.name = "pal_join";
            body.measured["measured_area"] = m.measured_area;
            body.measured["band_allowance"] = m.band_allowance;
            body.measured["stages"] = double(m.stage_count);
            body.measured["pose_mismatch"] = schedule.pose_mismatch();
            body.add_check("area_within_eps_plus_band", m.measured_area,
                           pal_eps + m.band_allowance, 0.0);
            body.checks.push_back({"poses_compatible", schedule.pose_mismatch(), 0.0, 1e-9,
                                   schedule.pose_mismatch() < 1e-9});
            if (!pal_out.svg_path.empty() || !pal_out.pgm_path.empty()) {
                Box box;
                for (const auto& stage : schedule.stages) {
                    box.expand(bounding_box(stage.scene));
                    box.expand(bounding_box(transformed(stage.scene, stage.movement.end())));
                }
                if (!box.empty()) {
                    const GridSpec grid = auto_grid(box, pal_cell, 4'000'000);
                    RasterMask mask(grid);
                    for (const auto& stage : schedule.stages)
                        mask.unite(sweep(stage.movement, stage.scene, 2, grid));
                    maybe_write_mask(pal_out, mask);
                }
            }
            return finish(make_report("paljoin",
                                      Json{{"offset", pal_offset},
                                           {"eps", pal_eps},
                                           {"len", pal_len},
                                           {"cell", pal_cell}},
                                      body),
                          pal_out);
        }

        if (dim2_cmd->parsed()) {
            const RigidMotion alpha =
                alpha_path.empty()
                    ? compose(rotation(Point(0, 0), M_PI / 3.0), translation(Point(1, 1)))
                    : motion_from_json(load_json_file(alpha_path));
            const CantorSpec radial{1.0, 2.0, dim2_ratio, dim2_depth};
            const CantorSpec vertical{0.0, 0.5, dim2_ratio, dim2_depth};
            const Scene scene = dimension2_example(radial, vertical);
            const Movement movement = dimension2_movement(alpha);
            const double extent = 2.0 + std::abs(alpha.c()) + 0.5;
            const GridSpec grid = auto_grid(Box{-extent, -extent, extent, extent}, dim2_cell);
            const RasterMask mask = sweep(movement, scene, 2, grid);
            const Scene cover = dimension2_covering(radial, vertical, alpha, extent);
            const RasterMask cover_mask = neighborhood(rasterize(cover, grid), 2.0 * grid.cell);
            ConstructionReport body;
            body.name = "dimension2";
            body.measured["sweep_area"] = mask.area();
            body.measured["scene_area"] = rasterize(scene, grid).area();
            body.measured["uncovered_cells"] = double(mask.uncovered_count(cover_mask, 0));
            body.checks.push_back({"swept_within_covering", body.measured["uncovered_cells"], 0.0,
                                   0.5, body.measured["uncovered_cells"] == 0.0});
            maybe_write_mask(dim2_out, mask, {{scene, "#d62728"}});
            return finish(make_report("example-k2",
                                      Json{{"depth", dim2_depth},
                                           {"ratio", dim2_ratio},
                                           {"cell", grid.cell},
                                           {"alpha", to_json(alpha)}},
                                      body),
                          dim2_out);
        }

        if (ven_cmd->parsed()) {
            const BlindParams params = default_blind_params(ven_gens);
            std::vector<RectangleSystem> gens{init_blind(params)};
            for (long s = 0; s + 1 < ven_gens; ++s)
                gens.push_back(refine(gens.back(), params.directions[size_t(s + 1)], ven_slats,
                                      params.widths[size_t(s + 1)]));
            ConstructionReport body;
            body.name = "venetian";
            Json per_generation = Json::array();
            for (size_t g = 0; g < gens.size(); ++g) {
                Json row;
                row["generation"] = g + 1;
                row["rectangles"] = gens[g].rectangles.size();
                Json shadows = Json::array();
                for (size_t k = 0; k <= g; ++k)
                    shadows.push_back(projection_measure(gens[g], params.directions[k]));
                row["shadows"] = shadows;
                Json dist = Json::array();
                for (int ix = -2; ix <= 2; ++ix)
                    for (int iy = -2; iy <= 2; ++iy)
                        dist.push_back(distance_set_measure(
                            gens[g], Point(double(ix) * double(g + 1) / (2.0 * std::sqrt(2.0)),
                                           double(iy) * double(g + 1) / (2.0 * std::sqrt(2.0)))));
                row["distance_sets"] = dist;
                per_generation.push_back(row);
                const double shadow = projection_measure(gens[g], gens[g].direction);
                body.measured["shadow_gen" + std::to_string(g + 1)] = shadow;
                if (g >= 1)
                    body.checks.push_back({"shadow_below_1_over_n_gen" + std::to_string(g + 1),
                                           shadow, 1.0 / double(g + 1), 0.0,
                                           shadow < 1.0 / double(g + 1)});
            }
            const auto mover = blind_mover(gens.back(), ven_R, ven_cell);
            body.measured["mover_area"] = mover.report.measured.at("sweep_area");
            for (const auto& c : mover.report.checks) body.checks.push_back(c);
            if (!ven_out.svg_path.empty() || !ven_out.pgm_path.empty()) {
                const GridSpec grid = auto_grid(bounding_box(gens.back().scene()), ven_cell);
                maybe_write_mask(ven_out, rasterize(gens.back().scene(), grid),
                                 {{gens.front().scene(), "#d62728"}});
            }
            Json report = make_report("venetian",
                                      Json{{"generations", ven_gens},
                                           {"slats", ven_slats},
                                           {"cell", ven_cell},
                                           {"distance", ven_R}},
                                      body);
            report["generations"] = per_generation;
            return finish(report, ven_out);
        }

        if (obstruct_cmd->parsed()) {
            const ObstructionCase scenario = obstruction_case_from_json(load_json_file(case_path));
            const double pad = 2.0 * scenario.disc_radius + 1.0;
            const GridSpec grid = auto_grid(Box{scenario.disc_center.real() - pad,
                                                scenario.disc_center.imag() - pad,
                                                scenario.disc_center.real() + pad,
                                                scenario.disc_center.imag() + pad},
                                            obstruct_cell);
            const ObstructionReport r = obstruction_coverage(scenario, grid);
            ConstructionReport body;
            body.name = "obstruct";
            body.measured["component_count"] = double(r.component_count);
            body.measured["component_start"] = double(r.component_start);
            body.measured["component_end"] = double(r.component_end);
            body.measured["probe_cells"] = double(r.probe_cells);
            body.measured["uncovered_cells"] = double(r.uncovered_cells);
            body.measured["hypothesis_met"] = r.hypothesis_met ? 1.0 : 0.0;
            // The coverage claim is an implication: with the probe staying in
            // one component there is nothing to verify.
            body.checks.push_back({"covered_when_separated",
                                   r.hypothesis_met && !r.covered ? 1.0 : 0.0, 0.0, 0.5,
                                   !r.hypothesis_met || r.covered});
            if (!obstruct_out.svg_path.empty() || !obstruct_out.pgm_path.empty()) {
                const Movement window =
                    scenario.t_end >= 1.0
                        ? scenario.movement
                        : Movement::restriction(scenario.movement, 0.0, scenario.t_end);
                const RasterMask swept = sweep(window, scenario.obstacle, 2, grid);
                maybe_write_mask(obstruct_out, swept, {{scenario.probe, "#2ca02c"}});
            }
            return finish(
                make_report("obstruct", Json{{"case", case_path}, {"cell", grid.cell}}, body),
                obstruct_out);
        }

        if (classify_cmd->parsed()) {
            const Json j = load_json_file(points_path);
            std::vector<Point> points;
            if (j.is_array()) {
                for (const auto& row : j) points.push_back(point_from_json(row));
            } else {
                const Scene scene = scene_from_json(j);
                for (const auto& prim : scene.primitives)
                    if (const auto* cloud = std::get_if<PointCloudPrim>(&prim))
                        points.insert(points.end(), cloud->points.begin(), cloud->points.end());
            }
            if (points.empty()) throw InvalidArgumentError("no points to classify");
            Box box;
            for (Point p : points) box.expand(p);
            const double diameter = std::hypot(box.width(), box.height());
            const Classification c = classify_component(points, classify_tol * diameter);
            ConstructionReport body;
            body.name = "classify";
            body.measured["line_residual"] = c.line_residual;
            body.measured["circle_residual"] = c.circle_residual;
            body.measured["circle_radius"] = c.circle_radius;
            body.measured["max_angular_gap"] = c.max_angular_gap;
            Json report =
                make_report("classify", Json{{"points", points_path}, {"tol", classify_tol}}, body);
            report["classification"] = to_string(c.kind);
            return finish(report, classify_out);
        }

        if (verify_cmd->parsed()) {
            const ConstructionReport body = run_lemma_suites(seed);
            return finish(make_report("verify-lemmas", Json{{"seed", seed}}, body), verify_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid input JSON: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
