#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kconvex/arc_chain.hpp"
#include "kconvex/bounds.hpp"
#include "kconvex/polygon.hpp"

namespace kconvex {

// Polygon wire format: {"k": number, "vertices": [[u, v], ...]} with
// Poincare-disk coordinates; see docs/formats.md.
nlohmann::json polygon_to_json(const ConvexPolygon& p);
ConvexPolygon polygon_from_json(const nlohmann::json& j);

nlohmann::json corpus_to_json(const std::vector<ConvexPolygon>& corpus);
std::vector<ConvexPolygon> corpus_from_json(const nlohmann::json& j);

nlohmann::json bounds_report_to_json(const BoundsReport& rep);

// Frozen CSV schema, one row per polygon:
// n,k,k1,k2,rho,r,R,r_bound,R_bound_dimensional,R_bound_as_written,gap_bound,verdict
std::string bounds_csv_header();
std::string bounds_csv_row(const BoundsReport& rep);

// One row per vertex: index,alpha,l_prev,l_next,kappaA,kappaB,flag
std::string curvature_csv_header();
std::string curvature_csv(const ConvexPolygon& p, const CurvatureBand& band, double rho);

nlohmann::json arc_chain_to_json(const ArcChain& chain);
nlohmann::json condition_report_to_json(const ConditionReport& rep);

const char* verdict_name(Verdict v);

}  // namespace kconvex
