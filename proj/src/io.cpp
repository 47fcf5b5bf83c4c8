#include "kconvex/io.hpp"

#include <sstream>

namespace kconvex {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "skipped";
    }
}

nlohmann::json polygon_to_json(const ConvexPolygon& p) {
    nlohmann::json j;
    j["k"] = p.scale();
    auto& verts = j["vertices"] = nlohmann::json::array();
    for (const auto& v : p.vertices()) {
        const auto d = v.to_disk();
        verts.push_back({d[0], d[1]});
    }
    return j;
}

ConvexPolygon polygon_from_json(const nlohmann::json& j) {
    const double k = j.at("k").get<double>();
    std::vector<ModelPoint> verts;
    for (const auto& xy : j.at("vertices"))
        verts.push_back(ModelPoint::from_disk(k, xy.at(0).get<double>(), xy.at(1).get<double>()));
    return ConvexPolygon::create(std::move(verts));
}

nlohmann::json corpus_to_json(const std::vector<ConvexPolygon>& corpus) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : corpus) arr.push_back(polygon_to_json(p));
    return arr;
}

std::vector<ConvexPolygon> corpus_from_json(const nlohmann::json& j) {
    std::vector<ConvexPolygon> out;
    for (const auto& item : j) out.push_back(polygon_from_json(item));
    return out;
}

nlohmann::json bounds_report_to_json(const BoundsReport& rep) {
    nlohmann::json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["k1"] = rep.band.k1;
    j["k2"] = rep.band.k2;
    j["strict_upper_band"] = rep.band.strict_upper;
    j["rho"] = rep.rho;
    j["hypothesis_vertex_flags"] = rep.hypotheses.vertex_ok;
    j["hypothesis_band_flag"] = rep.hypotheses.band_ok;
    j["hypotheses_ok"] = rep.hypotheses.all_ok;
    j["kappa_threshold"] = rep.hypotheses.kappa_threshold;
    j["r"] = rep.r;
    j["R"] = rep.R;
    j["r_bound"] = rep.r_bound;
    j["R_bound_dimensional"] = rep.R_bound_dimensional;
    j["R_bound_as_written"] = rep.R_bound_as_written;
    j["rupb_lhs"] = rep.rupb_lhs;
    j["rupb_rhs"] = rep.rupb_rhs;
    j["rupb_margin"] = rep.rupb_margin;
    j["r_margin"] = rep.r_margin;
    j["R_margin"] = rep.R_margin;
    j["tau"] = rep.tau;
    j["gap_bound"] = rep.gap_bound;
    j["variant"] = rep.variant == Ln2Variant::dimensional ? "dimensional" : "as-written";
    j["verdict"] = verdict_name(rep.verdict);
    return j;
}

std::string bounds_csv_header() {
    return "n,k,k1,k2,rho,r,R,r_bound,R_bound_dimensional,R_bound_as_written,"
           "gap_bound,verdict";
}

std::string bounds_csv_row(const BoundsReport& rep) {
    std::ostringstream os;
    os << rep.n << ',' << fmt(rep.k) << ',' << fmt(rep.band.k1) << ',' << fmt(rep.band.k2)
       << ',' << fmt(rep.rho) << ',' << fmt(rep.r) << ',' << fmt(rep.R) << ','
       << fmt(rep.r_bound) << ',' << fmt(rep.R_bound_dimensional) << ','
       << fmt(rep.R_bound_as_written) << ',' << fmt(rep.gap_bound) << ','
       << verdict_name(rep.verdict);
    return os.str();
}

std::string curvature_csv_header() {
    return "index,alpha,l_prev,l_next,kappaA,kappaB,flag";
}

std::string curvature_csv(const ConvexPolygon& p, const CurvatureBand& band, double rho) {
    const auto rep = vertex_curvatures(p, band.k1);
    const auto flags = check_theorem2_hypotheses(p, band, rho);
    std::ostringstream os;
    for (int i = 0; i < p.size(); ++i) {
        const auto& vc = rep.per_vertex[i];
        os << i << ',' << fmt(vc.alpha) << ',' << fmt(vc.l_prev) << ',' << fmt(vc.l_next)
           << ',' << fmt(vc.kappa_a) << ',' << fmt(vc.kappa_b) << ','
           << (flags.vertex_ok[i] ? 1 : 0) << '\n';
    }
    return os.str();
}

nlohmann::json arc_chain_to_json(const ArcChain& chain) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& arc : chain.arcs) {
        const auto d = arc.center.to_disk();
        arr.push_back({{"center_xy", {d[0], d[1]}},
                       {"rho", arc.rho},
                       {"from_index", arc.from_index},
                       {"to_index", arc.to_index}});
    }
    return arr;
}

nlohmann::json condition_report_to_json(const ConditionReport& rep) {
    return {{"vertex", rep.vertex},
            {"alpha", rep.alpha},
            {"delta_prev", rep.delta_prev},
            {"delta_next", rep.delta_next},
            {"delta_bar_prev", rep.delta_bar_prev},
            {"delta_bar_next", rep.delta_bar_next},
            {"junction_angle", rep.junction_angle},
            {"cco1", rep.cco1},
            {"cco2", rep.cco2},
            {"cco3", rep.cco3},
            {"implication_ok", rep.implication_ok}};
}

}  // namespace kconvex
