// Command-line driver: generate polygon corpora, measure curvature and
// radii, verify the theorem bounds, build rounded arc chains, and run
// variable-curvature surface scenarios. Exit codes: 0 = all pass or
// skipped, 1 = any failed verdict, 2 = input error.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kconvex/arc_chain.hpp"
#include "kconvex/bounds.hpp"
#include "kconvex/extremal.hpp"
#include "kconvex/generator.hpp"
#include "kconvex/io.hpp"
#include "kconvex/surface.hpp"

using nlohmann::json;
using namespace kconvex;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + path);
    out << text;
}

Ln2Variant parse_variant(const std::string& name) {
    if (name == "dimensional") return Ln2Variant::dimensional;
    if (name == "as-written") return Ln2Variant::as_written;
    throw InputError("unknown --variant: " + name);
}

std::vector<ConvexPolygon> polygons_from_input(const json& j) {
    if (j.is_array()) return corpus_from_json(j);
    return {polygon_from_json(j)};
}

// ---- gen ----------------------------------------------------------------

struct GenConfig {
    std::uint64_t seed = 1;
    int size = 100;
    GeneratorParams params;
    std::string out = "-";
};

int cmd_gen(const GenConfig& cfg) {
    if (cfg.params.band.k2 > 0.0 &&
        cfg.params.band.k2 / std::tanh(cfg.params.band.k2 * cfg.params.rho) <
            cfg.params.band.k1) {
        throw InputError(
            "hypotheses unreachable: the band condition k2 coth(k2 rho) >= k1 "
            "fails for every polygon at these parameters; lower rho or widen "
            "the band");
    }
    GeneratorStats stats;
    const auto corpus = generate_corpus(cfg.seed, cfg.size, cfg.params, stats);
    write_text(cfg.out, corpus_to_json(corpus).dump(2) + "\n");
    std::cerr << "generated " << corpus.size() << " polygons (proposed " << stats.proposed
              << ", rejected " << stats.rejected_convexity << " non-convex, "
              << stats.rejected_hypotheses << " hypothesis-violating)\n";
    return 0;
}

// ---- measure ------------------------------------------------------------

int cmd_measure(const std::string& in, const CurvatureBand& band, double rho,
                const std::string& out, const std::string& csv) {
    const json input = read_json_file(in);
    const auto polys = polygons_from_input(input);
    json report = json::array();
    for (const auto& p : polys) {
        const auto inb = inradius(p);
        const auto cir = circumradius(p);
        const auto curv = vertex_curvatures(p, band.k1);
        const auto flags = check_theorem2_hypotheses(p, band, rho);
        json verts = json::array();
        for (int i = 0; i < p.size(); ++i) {
            const auto& vc = curv.per_vertex[i];
            verts.push_back({{"index", i},
                             {"alpha", vc.alpha},
                             {"l_prev", vc.l_prev},
                             {"l_next", vc.l_next},
                             {"kappaA", vc.kappa_a},
                             {"kappaB", vc.kappa_b},
                             {"hypothesis_ok", static_cast<bool>(flags.vertex_ok[i])}});
        }
        report.push_back({{"n", p.size()},
                          {"k", p.scale()},
                          {"r", inb.r},
                          {"R", cir.R},
                          {"gap", cir.R - inb.r},
                          {"hypotheses_ok", flags.all_ok},
                          {"vertices", verts}});
    }
    write_text(out, report.dump(2) + "\n");
    if (!csv.empty()) {
        if (polys.size() != 1)
            throw InputError("--csv emits the per-vertex curvature table and "
                             "needs a single-polygon input");
        write_text(csv, curvature_csv_header() + "\n" + curvature_csv(polys[0], band, rho));
    }
    return 0;
}

// ---- verify -------------------------------------------------------------

int cmd_verify(const std::string& in, const CurvatureBand& band, double rho,
               Ln2Variant variant, const std::string& out, const std::string& csv) {
    const json input = read_json_file(in);
    const auto polys = polygons_from_input(input);
    json rows = json::array();
    std::ostringstream csv_text;
    csv_text << bounds_csv_header() << '\n';
    int pass = 0, fail = 0, skipped = 0;
    double min_rupb = std::numeric_limits<double>::infinity();
    double min_r = min_rupb, min_R = min_rupb;
    for (const auto& p : polys) {
        const auto rep = verify_theorem2(p, band, rho, variant);
        rows.push_back(bounds_report_to_json(rep));
        csv_text << bounds_csv_row(rep) << '\n';
        switch (rep.verdict) {
            case Verdict::pass: ++pass; break;
            case Verdict::fail: ++fail; break;
            default: ++skipped; break;
        }
        if (rep.verdict != Verdict::skipped) {
            min_rupb = std::min(min_rupb, rep.rupb_margin);
            min_r = std::min(min_r, rep.r_margin);
            min_R = std::min(min_R, rep.R_margin);
        }
    }
    json summary = {{"count", static_cast<int>(polys.size())},
                    {"pass", pass},
                    {"fail", fail},
                    {"skipped", skipped}};
    if (pass + fail > 0) {
        summary["min_rupb_margin"] = min_rupb;
        summary["min_r_margin"] = min_r;
        summary["min_R_margin"] = min_R;
    }
    write_text(out, json({{"reports", rows}, {"summary", summary}}).dump(2) + "\n");
    if (!csv.empty()) write_text(csv, csv_text.str());
    return fail > 0 ? 1 : 0;
}

// ---- round --------------------------------------------------------------

int cmd_round(const std::string& in, double rho, const CurvatureBand& band,
              const std::vector<double>& eps_list, const std::string& out) {
    const json input = read_json_file(in);
    const auto p = polygon_from_json(input);
    const auto chain = build_arc_chain(p, rho);
    json conditions = json::array();
    for (int i = 0; i < p.size(); ++i)
        conditions.push_back(condition_report_to_json(convexity_condition(chain, i, band.k1)));
    json parallel = json::array();
    for (double eps : eps_list) {
        const auto curve = parallel_curve(chain, eps);
        const auto bounds = thm1_bounds_on_parallel(curve, band);
        parallel.push_back({{"eps", eps},
                            {"side_piece_curvature", curve.side_piece_curvature()},
                            {"vertex_piece_curvature", curve.vertex_piece_curvature()},
                            {"r_bound", bounds.r_max},
                            {"R_bound_dimensional", bounds.R_max_dimensional},
                            {"R_bound_as_written", bounds.R_max_as_written}});
    }
    write_text(out, json({{"rho", rho},
                          {"arcs", arc_chain_to_json(chain)},
                          {"conditions", conditions},
                          {"parallel_curves", parallel}})
                            .dump(2) +
                        "\n");
    return 0;
}

// ---- surface ------------------------------------------------------------

SurfaceProfile profile_from_json(const json& j) {
    const std::string name = j.at("profile").get<std::string>();
    const json& params = j.value("params", json::object());
    if (name == "constant")
        return SurfaceProfile::constant_curvature(params.value("k", 1.0),
                                                  params.value("r_max", 12.0));
    if (name == "blended")
        return SurfaceProfile::blended(params.value("k1", 1.0), params.value("k2", 0.5),
                                       params.value("r0", 1.0), params.value("width", 1.0),
                                       params.value("r_max", 12.0));
    throw InputError("unknown surface profile: " + name);
}

int cmd_surface(const std::string& in, const CurvatureBand& band, double rho,
                const std::string& out) {
    const json scenario = read_json_file(in);
    const auto prof = profile_from_json(scenario);
    const bool pinched = prof.pinched_within(band.k1, band.k2, 0.0, 3.0);
    json results = json::array();
    bool any_fail = false;
    for (const auto& poly : scenario.value("polygons", json::array())) {
        std::vector<SurfacePoint> vertices;
        for (const auto& v : poly)
            vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
        const auto [r, R] = polygon_extremal_radii_numeric(prof, vertices);
        // Eq.-style convexity check at the numeric resolution of the solver.
        const double lhs = band.k1 / std::tanh(band.k1 * r);
        const double rhs = band.k2 > 0.0 ? band.k2 / std::tanh(band.k2 * rho) : 1.0 / rho;
        const double margin = lhs - rhs;
        const bool ok = margin >= -1e-3;
        any_fail = any_fail || !ok;
        results.push_back({{"n", static_cast<int>(vertices.size())},
                           {"r", r},
                           {"R", R},
                           {"rupb_lhs", lhs},
                           {"rupb_rhs", rhs},
                           {"rupb_margin", margin},
                           {"verdict", ok ? "pass" : "fail"}});
    }
    write_text(out, json({{"profile", scenario.at("profile")},
                          {"pinched_within_band", pinched},
                          {"polygons", results}})
                            .dump(2) +
                        "\n");
    return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kappa-convex polygon bounds toolkit"};
    app.require_subcommand(1);

    double k1 = 1.0, k2 = 0.5, rho = 0.5;
    std::string variant = "dimensional";
    std::string in, out = "-", csv;
    std::vector<double> eps_list;

    auto add_band = [&](CLI::App* cmd) {
        cmd->add_option("--k1", k1, "lower curvature scale (K >= -k1^2)");
        cmd->add_option("--k2", k2, "upper curvature scale (K <= -k2^2)");
        cmd->add_option("--rho", rho, "convexity radius rho");
    };

    GenConfig gen;
    auto* cmd_gen_app = app.add_subcommand("gen", "generate a random polygon corpus");
    cmd_gen_app->add_option("--seed", gen.seed, "corpus seed");
    cmd_gen_app->add_option("--size", gen.size, "number of polygons")
        ->check(CLI::NonNegativeNumber);
    int n_exact = 0;
    cmd_gen_app->add_option("--n", n_exact, "exact vertex count (default: range 3..6)");
    cmd_gen_app->add_option("--n-min", gen.params.n_min, "minimum vertex count");
    cmd_gen_app->add_option("--n-max", gen.params.n_max, "maximum vertex count");
    cmd_gen_app->add_option("--r0-min", gen.params.r0_min, "minimum vertex-circle radius");
    cmd_gen_app->add_option("--r0-max", gen.params.r0_max, "maximum vertex-circle radius");
    cmd_gen_app->add_option("--k-min", gen.params.k_min, "minimum model curvature scale");
    cmd_gen_app->add_option("--k-max", gen.params.k_max, "maximum model curvature scale");
    cmd_gen_app->add_flag_callback(
        "--no-hypotheses", [&] { gen.params.require_hypotheses = false; },
        "skip the hypothesis filter");
    cmd_gen_app->add_option("--out", gen.out, "output path (- for stdout)");
    add_band(cmd_gen_app);

    auto* cmd_measure_app =
        app.add_subcommand("measure", "measure radii and vertex curvatures");
    cmd_measure_app->add_option("--in", in, "polygon or corpus JSON")->required();
    cmd_measure_app->add_option("--out", out, "JSON report path (- for stdout)");
    cmd_measure_app->add_option("--csv", csv, "per-vertex curvature CSV (single polygon)");
    add_band(cmd_measure_app);

    auto* cmd_verify_app = app.add_subcommand("verify", "verify the polygon theorem bounds");
    cmd_verify_app->add_option("--in", in, "polygon or corpus JSON")->required();
    cmd_verify_app->add_option("--variant", variant, "ln2 prefactor variant")
        ->check(CLI::IsMember({"dimensional", "as-written"}));
    cmd_verify_app->add_option("--out", out, "JSON report path (- for stdout)");
    cmd_verify_app->add_option("--csv", csv, "CSV report path");
    add_band(cmd_verify_app);

    auto* cmd_round_app = app.add_subcommand("round", "build the rounded arc chain");
    cmd_round_app->add_option("--in", in, "polygon JSON")->required();
    cmd_round_app->add_option("--eps", eps_list, "parallel-curve offsets");
    cmd_round_app->add_option("--out", out, "JSON report path (- for stdout)");
    add_band(cmd_round_app);

    auto* cmd_surface_app =
        app.add_subcommand("surface", "run a variable-curvature surface scenario");
    cmd_surface_app->add_option("--in", in, "scenario JSON")->required();
    cmd_surface_app->add_option("--out", out, "JSON report path (- for stdout)");
    add_band(cmd_surface_app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_gen_app->parsed()) {
            if (n_exact > 0) gen.params.n_min = gen.params.n_max = n_exact;
            gen.params.band = CurvatureBand(k1, k2);
            gen.params.rho = rho;
            return cmd_gen(gen);
        }
        const CurvatureBand band(k1, k2);
        if (cmd_measure_app->parsed()) return cmd_measure(in, band, rho, out, csv);
        if (cmd_verify_app->parsed())
            return cmd_verify(in, band, rho, parse_variant(variant), out, csv);
        if (cmd_round_app->parsed()) return cmd_round(in, rho, band, eps_list, out);
        if (cmd_surface_app->parsed()) return cmd_surface(in, band, rho, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
