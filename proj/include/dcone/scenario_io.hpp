#pragma once

#include "dcone/isoptic.hpp"
#include "dcone/verifier.hpp"

#include "json.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace dcone {

struct OutputSettings
{
  std::string report_path;
  std::string csv_dir;
};

/// Scenario document:
///   body       {kind, params, center}
///   surface    {kind, center, radius, perturbations[]}
///   sampling   {N, M, grid_seed}
///   tolerances {congruence, ratio, center, symmetry}
///   output     {report_path, csv_dir}
/// Unknown keys anywhere raise ErrorCode::Schema.
struct ScenarioFile
{
  Scenario scenario;
  OutputSettings output;
};

ConvexBody parse_body(const nlohmann::json& doc);
StarSurface parse_surface(const nlohmann::json& doc, int dim);
ScenarioFile parse_scenario(const nlohmann::json& doc);
ScenarioFile load_scenario(const std::filesystem::path& path);

/// Planar document: planar_body {a0, cos[], sin[]}, isoptic {alpha, N}, output.
struct PlanarFile
{
  PlanarBody body;
  double alpha;
  std::size_t count;
  OutputSettings output;
};

PlanarFile parse_planar(const nlohmann::json& doc);
PlanarFile load_planar(const std::filesystem::path& path);

nlohmann::json to_json(const Vec& v);
nlohmann::json to_json(const TheoremReport& report);
nlohmann::json to_json(const PathRecord& record);
nlohmann::json to_json(const std::vector<SectionRecord>& records);
nlohmann::json to_json(const Remark2Report& report, double alpha, std::size_t count);

void write_graze_csv(std::ostream& os, const Graze& graze);
void write_theorem_csv(std::ostream& os, const TheoremReport& report);
void write_isoptic_csv(std::ostream& os, const IsopticCurve& curve);

}  // namespace dcone
