#include "dcone/cli.hpp"

#include "dcone/error.hpp"
#include "dcone/sampling.hpp"
#include "dcone/scenario_io.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace dcone {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Flags shared by the scenario-driven subcommands.
struct Overrides
{
  std::string scenario_path;
  std::optional<std::size_t> samples;
  std::optional<int> meridians;
  std::optional<double> tol_congruence;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string csv_dir;
};

void add_common(CLI::App* cmd, Overrides& o, bool scenario = true)
{
  if (scenario) {
    cmd->add_option("scenario", o.scenario_path, "Scenario JSON file")->required();
    cmd->add_option("--samples", o.samples, "Number N of sampled apexes / partner grid points");
    cmd->add_option("--meridians", o.meridians, "Meridians M per graze");
    cmd->add_option("--seed", o.seed, "Grid seed");
  }
  cmd->add_option("--tol-congruence", o.tol_congruence, "Cone congruence tolerance (radians)");
  cmd->add_option("--out", o.out, "Report JSON path");
  cmd->add_option("--csv-dir", o.csv_dir, "Directory for CSV dumps");
}

ScenarioFile load(const Overrides& o)
{
  ScenarioFile file = load_scenario(o.scenario_path);
  Scenario& s = file.scenario;
  if (o.samples) {
    s.samples = *o.samples;
  }
  if (o.meridians) {
    s.meridians = *o.meridians;
  }
  if (o.tol_congruence) {
    if (!(*o.tol_congruence > 0.0)) {
      throw GeometryError(ErrorCode::InvalidInput, "--tol-congruence must be positive");
    }
    s.tolerances.congruence = *o.tol_congruence;
  }
  if (o.seed) {
    s.seed = *o.seed;
  }
  if (!o.out.empty()) {
    file.output.report_path = o.out;
  }
  if (!o.csv_dir.empty()) {
    file.output.csv_dir = o.csv_dir;
  }
  return file;
}

Vec point_option(const std::vector<double>& values, int dim, const char* flag)
{
  if (values.size() != static_cast<std::size_t>(dim)) {
    throw GeometryError(ErrorCode::InvalidInput,
                        std::string(flag) + " needs " + std::to_string(dim) + " comma-separated coordinates");
  }
  Vec v(dim);
  for (int i = 0; i < dim; ++i) {
    v[i] = values[static_cast<std::size_t>(i)];
  }
  return v;
}

Vec first_sample(const Scenario& s)
{
  return s.surface.sample(std::max<std::size_t>(s.samples, 1), s.seed).front();
}

void emit_report(const json& report, const OutputSettings& output, std::ostream& out)
{
  const std::string text = report.dump(2) + "\n";
  if (output.report_path.empty()) {
    out << text;
    return;
  }
  const fs::path path(output.report_path);
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  std::ofstream file(path, std::ios::binary);
  if (!(file << text)) {
    throw GeometryError(ErrorCode::InvalidInput, "cannot write " + path.string());
  }
}

template <class Writer>
void emit_csv(const std::string& dir, const std::string& name, Writer&& write)
{
  if (dir.empty()) {
    return;
  }
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / name;
  std::ofstream file(path, std::ios::binary);
  write(file);
  if (!file) {
    throw GeometryError(ErrorCode::InvalidInput, "cannot write " + path.string());
  }
}

std::string one_line(std::string text)
{
  for (char& c : text) {
    if (c == '\n' || c == '\r') {
      c = ' ';
    }
  }
  return text;
}

int exit_code(Verdict verdict)
{
  switch (verdict) {
    case Verdict::Verified:
      return kExitSuccess;
    case Verdict::HypothesisFailed:
      return kExitHypothesisFailed;
    case Verdict::ConclusionFailed:
      return kExitConclusionFailed;
  }
  return kExitError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Support double-cone verification harness", "dcone"};
  app.require_subcommand(1);

  Overrides o;
  std::vector<double> apex;
  std::vector<double> from;
  std::vector<double> to;
  double partner_tol = 1e-3;
  std::size_t directions = 64;
  int loop_points = 128;
  std::optional<double> alpha;
  std::optional<std::size_t> vertices;

  CLI::App* check = app.add_subcommand("check-theorem", "Full hypothesis and conclusion check");
  add_common(check, o);

  CLI::App* graze_cmd = app.add_subcommand("graze", "Graze and cone directions from one apex");
  add_common(graze_cmd, o);
  graze_cmd->add_option("--apex", apex, "Apex coordinates (default: first sampled point of L)")->delimiter(',');

  CLI::App* partner = app.add_subcommand("partner", "Partner search from one apex");
  add_common(partner, o);
  partner->add_option("--apex", apex, "Apex coordinates (default: first sampled point of L)")->delimiter(',');

  CLI::App* path_cmd = app.add_subcommand("appendix-path", "Diameter-difference search along a path on L");
  add_common(path_cmd, o);
  path_cmd->add_option("--from", from, "Path start x0 on L (default: first sampled point)")->delimiter(',');
  path_cmd->add_option("--to", to, "Path end y0 on L (default: partner of x0)")->delimiter(',');
  path_cmd->add_option("--partner-tol", partner_tol, "Relaxed congruence threshold along the path");

  CLI::App* sections = app.add_subcommand("conjecture1", "Sections of L by parallel support planes");
  add_common(sections, o);
  sections->add_option("--directions", directions, "Number of plane normals");
  sections->add_option("--loop-points", loop_points, "Points per section loop");

  CLI::App* isoptic = app.add_subcommand("isoptic", "Planar isoptic and asymmetry report");
  add_common(isoptic, o);
  isoptic->add_option("--alpha", alpha, "Visual angle in (0, pi)");
  isoptic->add_option("--count", vertices, "Isoptic vertices");

  CLI::App* self = app.add_subcommand("selftest", "Built-in analytic oracle suite");
  add_common(self, o, false);
  std::uint64_t self_seed = 0;
  self->add_option("--seed", self_seed, "Grid seed of the sampled scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitSuccess;
    }
    err << "dcone: " << one_line(e.what()) << '\n';
    return kExitError;
  }

  try {
    if (check->parsed()) {
      const ScenarioFile file = load(o);
      const TheoremReport report = check_theorem(file.scenario);
      emit_csv(file.output.csv_dir, "apexes.csv", [&](std::ostream& os) { write_theorem_csv(os, report); });
      emit_report(to_json(report), file.output, out);
      return exit_code(report.verdict);
    }
    if (graze_cmd->parsed()) {
      const ScenarioFile file = load(o);
      const Scenario& s = file.scenario;
      const Vec x = apex.empty() ? first_sample(s) : point_option(apex, s.body.dim(), "--apex");
      const Graze g = graze(s.body, x, s.meridians);
      emit_csv(file.output.csv_dir.empty() ? "." : file.output.csv_dir, "graze.csv",
               [&](std::ostream& os) { write_graze_csv(os, g); });
      emit_report({{"apex", to_json(x)}, {"contacts", g.contacts.size()}, {"diameter", graze_diameter(g)}},
                  file.output, out);
      return kExitSuccess;
    }
    if (partner->parsed()) {
      const ScenarioFile file = load(o);
      const Scenario& s = file.scenario;
      const Vec x = apex.empty() ? first_sample(s) : point_option(apex, s.body.dim(), "--apex");
      const PartnerResult r = find_partner(s, x);
      emit_report({{"x", to_json(x)},
                   {"y", to_json(r.y)},
                   {"distance", r.distance},
                   {"pass", r.distance < s.tolerances.congruence}},
                  file.output, out);
      return kExitSuccess;
    }
    if (path_cmd->parsed()) {
      const ScenarioFile file = load(o);
      const Scenario& s = file.scenario;
      const Vec x0 = from.empty() ? first_sample(s) : point_option(from, s.body.dim(), "--from");
      const Vec y0 = to.empty() ? find_partner(s, x0).y : point_option(to, s.body.dim(), "--to");
      const PathRecord record = appendix_path_search(s, x0, y0, partner_tol);
      emit_report(to_json(record), file.output, out);
      return kExitSuccess;
    }
    if (sections->parsed()) {
      const ScenarioFile file = load(o);
      const Scenario& s = file.scenario;
      const PointList dirs = sphere_grid(s.body.dim(), directions);
      const std::vector<SectionRecord> records = conjecture1_scan(s, dirs, loop_points);
      double worst = 0.0;
      for (const SectionRecord& r : records) {
        if (r.error.empty()) {
          worst = std::max(worst, r.chord_defect);
        }
      }
      emit_report({{"max_chord_defect", worst}, {"sections", to_json(records)}}, file.output, out);
      return kExitSuccess;
    }
    if (isoptic->parsed()) {
      PlanarFile file = load_planar(o.scenario_path);
      if (alpha) {
        file.alpha = *alpha;
      }
      if (vertices) {
        file.count = *vertices;
      }
      if (!o.out.empty()) {
        file.output.report_path = o.out;
      }
      if (!o.csv_dir.empty()) {
        file.output.csv_dir = o.csv_dir;
      }
      const IsopticCurve curve = isoptic_curve(file.body, file.alpha, file.count);
      const Remark2Report report = remark2_report(file.body, file.alpha, file.count);
      emit_csv(file.output.csv_dir.empty() ? "." : file.output.csv_dir, "isoptic.csv",
               [&](std::ostream& os) { write_isoptic_csv(os, curve); });
      emit_report(to_json(report, file.alpha, file.count), file.output, out);
      return kExitSuccess;
    }
    if (self->parsed()) {
      SelftestOptions options;
      options.seed = self_seed;
      if (o.tol_congruence) {
        options.congruence_tol = *o.tol_congruence;
      }
      const json report = selftest_report(options);
      for (const json& c : report.at("checks")) {
        err << (c.at("pass").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>() << '\n';
      }
      err << "selftest: " << report.at("passed") << " passed, " << report.at("failed") << " failed\n";
      OutputSettings output;
      output.report_path = o.out;
      emit_report(report, output, out);
      return report.at("failed").get<int>() == 0 ? kExitSuccess : kExitError;
    }
  } catch (const std::exception& e) {
    err << "dcone: " << one_line(e.what()) << '\n';
    return kExitError;
  }
  err << "dcone: no subcommand\n";
  return kExitError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  std::vector<const char*> argv;
  argv.push_back("dcone");
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dcone
