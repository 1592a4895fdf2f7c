#include "dcone/scenario_io.hpp"

#include "dcone/error.hpp"
#include "dcone/sampling.hpp"

#include <fstream>
#include <iomanip>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace dcone {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what)
{
  throw GeometryError(ErrorCode::Schema, what);
}

void require_object(const json& doc, const std::string& where)
{
  if (!doc.is_object()) {
    schema_error(where + " must be an object");
  }
}

void allow_keys(const json& doc, const std::string& where, std::initializer_list<const char*> keys)
{
  require_object(doc, where);
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.contains(key)) {
      schema_error("unknown key '" + key + "' in " + where);
    }
  }
}

const json& require(const json& doc, const char* key, const std::string& where)
{
  if (!doc.contains(key)) {
    schema_error("missing key '" + std::string(key) + "' in " + where);
  }
  return doc.at(key);
}

double number(const json& value, const std::string& where)
{
  if (!value.is_number()) {
    schema_error(where + " must be a number");
  }
  return value.get<double>();
}

double positive(const json& value, const std::string& where)
{
  const double x = number(value, where);
  if (!(x > 0.0)) {
    schema_error(where + " must be positive");
  }
  return x;
}

std::size_t count(const json& value, const std::string& where)
{
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    schema_error(where + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::string text(const json& value, const std::string& where)
{
  if (!value.is_string()) {
    schema_error(where + " must be a string");
  }
  return value.get<std::string>();
}

Vec vector_of(const json& value, const std::string& where)
{
  if (!value.is_array() || value.empty() || value.size() > static_cast<std::size_t>(kMaxDim)) {
    schema_error(where + " must be an array of 1.." + std::to_string(kMaxDim) + " numbers");
  }
  Vec v(static_cast<Eigen::Index>(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = number(value[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

std::vector<double> numbers(const json& value, const std::string& where)
{
  if (!value.is_array()) {
    schema_error(where + " must be an array of numbers");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(number(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

OutputSettings parse_output(const json& doc)
{
  OutputSettings out;
  allow_keys(doc, "output", {"report_path", "csv_dir"});
  if (doc.contains("report_path")) {
    out.report_path = text(doc.at("report_path"), "output.report_path");
  }
  if (doc.contains("csv_dir")) {
    out.csv_dir = text(doc.at("csv_dir"), "output.csv_dir");
  }
  return out;
}

json read_json(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) {
    throw GeometryError(ErrorCode::InvalidInput, "cannot read " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    schema_error(path.string() + ": " + e.what());
  }
}

json finite_or_null(double x)
{
  return std::isfinite(x) ? json(x) : json(nullptr);
}

}  // namespace

ConvexBody parse_body(const json& doc)
{
  allow_keys(doc, "body", {"kind", "params", "center"});
  const std::string kind = text(require(doc, "kind", "body"), "body.kind");
  const json& params = require(doc, "params", "body");

  if (kind == "ellipsoid") {
    allow_keys(params, "body.params", {"matrix"});
    const Vec center = vector_of(require(doc, "center", "body"), "body.center");
    const json& rows = require(params, "matrix", "body.params");
    const auto n = center.size();
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
      schema_error("body.params.matrix must be an n x n array");
    }
    Mat shape(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Vec row = vector_of(rows[static_cast<std::size_t>(i)], "body.params.matrix row");
      if (row.size() != n) {
        schema_error("body.params.matrix must be an n x n array");
      }
      shape.row(i) = row.transpose();
    }
    return ConvexBody::ellipsoid(shape, center);
  }
  if (kind == "lp_ball") {
    allow_keys(params, "body.params", {"p", "radius"});
    const Vec center = vector_of(require(doc, "center", "body"), "body.center");
    return ConvexBody::lp_ball(number(require(params, "p", "body.params"), "body.params.p"),
                               number(require(params, "radius", "body.params"), "body.params.radius"),
                               center);
  }
  if (kind == "minkowski_sum") {
    allow_keys(params, "body.params", {"summands"});
    const json& list = require(params, "summands", "body.params");
    if (!list.is_array() || list.empty()) {
      schema_error("body.params.summands must be a nonempty array");
    }
    std::vector<ConvexBody> summands;
    for (const json& item : list) {
      summands.push_back(parse_body(item));
    }
    if (doc.contains("center")) {
      return ConvexBody::minkowski_sum(std::move(summands), vector_of(doc.at("center"), "body.center"));
    }
    return ConvexBody::minkowski_sum(std::move(summands));
  }
  schema_error("body.kind must be one of ellipsoid, lp_ball, minkowski_sum");
}

StarSurface parse_surface(const json& doc, int dim)
{
  allow_keys(doc, "surface", {"kind", "center", "radius", "perturbations"});
  const std::string kind = text(require(doc, "kind", "surface"), "surface.kind");
  const Vec center =
      doc.contains("center") ? vector_of(doc.at("center"), "surface.center") : Vec(Vec::Zero(dim));
  const double radius = positive(require(doc, "radius", "surface"), "surface.radius");

  std::vector<Monomial> terms;
  if (doc.contains("perturbations")) {
    const json& list = doc.at("perturbations");
    if (!list.is_array()) {
      schema_error("surface.perturbations must be an array");
    }
    for (const json& item : list) {
      allow_keys(item, "surface.perturbations[]", {"coef", "exponents"});
      Monomial m;
      m.coef = number(require(item, "coef", "surface.perturbations[]"), "perturbation coef");
      const json& exps = require(item, "exponents", "surface.perturbations[]");
      if (!exps.is_array()) {
        schema_error("perturbation exponents must be an array of integers");
      }
      for (const json& e : exps) {
        if (!e.is_number_integer()) {
          schema_error("perturbation exponents must be an array of integers");
        }
        m.exponents.push_back(e.get<int>());
      }
      terms.push_back(std::move(m));
    }
  }
  if (kind == "sphere") {
    if (!terms.empty()) {
      schema_error("surface.kind sphere takes no perturbations");
    }
    return StarSurface::sphere(center, radius);
  }
  if (kind == "perturbed") {
    return StarSurface::perturbed(center, radius, std::move(terms));
  }
  schema_error("surface.kind must be sphere or perturbed");
}

ScenarioFile parse_scenario(const json& doc)
{
  allow_keys(doc, "scenario", {"body", "surface", "sampling", "tolerances", "output"});
  ConvexBody body = parse_body(require(doc, "body", "scenario"));
  StarSurface surface = parse_surface(require(doc, "surface", "scenario"), body.dim());
  if (surface.dim() != body.dim()) {
    schema_error("body and surface dimensions differ");
  }
  const bool analytic = surface.is_sphere();
  ScenarioFile file{Scenario{std::move(body), std::move(surface)}, {}};
  Scenario& s = file.scenario;
  s.tolerances.congruence = analytic ? 1e-6 : 1e-3;

  if (doc.contains("sampling")) {
    const json& sampling = doc.at("sampling");
    allow_keys(sampling, "sampling", {"N", "M", "grid_seed"});
    if (sampling.contains("N")) {
      s.samples = count(sampling.at("N"), "sampling.N");
    }
    if (sampling.contains("M")) {
      s.meridians = static_cast<int>(count(sampling.at("M"), "sampling.M"));
    }
    if (sampling.contains("grid_seed")) {
      s.seed = count(sampling.at("grid_seed"), "sampling.grid_seed");
    }
  }
  if (doc.contains("tolerances")) {
    const json& tol = doc.at("tolerances");
    allow_keys(tol, "tolerances", {"congruence", "ratio", "center", "symmetry"});
    if (tol.contains("congruence")) {
      s.tolerances.congruence = positive(tol.at("congruence"), "tolerances.congruence");
    }
    if (tol.contains("ratio")) {
      s.tolerances.ratio = positive(tol.at("ratio"), "tolerances.ratio");
    }
    if (tol.contains("center")) {
      s.tolerances.center = positive(tol.at("center"), "tolerances.center");
    }
    if (tol.contains("symmetry")) {
      s.tolerances.symmetry = positive(tol.at("symmetry"), "tolerances.symmetry");
    }
  }
  if (doc.contains("output")) {
    file.output = parse_output(doc.at("output"));
  }
  return file;
}

ScenarioFile load_scenario(const std::filesystem::path& path)
{
  return parse_scenario(read_json(path));
}

PlanarFile parse_planar(const json& doc)
{
  allow_keys(doc, "planar document", {"planar_body", "isoptic", "output"});
  const json& body_doc = require(doc, "planar_body", "planar document");
  allow_keys(body_doc, "planar_body", {"a0", "cos", "sin"});
  const double a0 = number(require(body_doc, "a0", "planar_body"), "planar_body.a0");
  std::vector<double> cos_terms = body_doc.contains("cos") ? numbers(body_doc.at("cos"), "planar_body.cos")
                                                           : std::vector<double>{};
  std::vector<double> sin_terms = body_doc.contains("sin") ? numbers(body_doc.at("sin"), "planar_body.sin")
                                                           : std::vector<double>{};
  double alpha = std::numbers::pi / 2.0;
  std::size_t vertices = 256;
  if (doc.contains("isoptic")) {
    const json& iso = doc.at("isoptic");
    allow_keys(iso, "isoptic", {"alpha", "N"});
    if (iso.contains("alpha")) {
      alpha = number(iso.at("alpha"), "isoptic.alpha");
    }
    if (iso.contains("N")) {
      vertices = count(iso.at("N"), "isoptic.N");
    }
  }
  OutputSettings output;
  if (doc.contains("output")) {
    output = parse_output(doc.at("output"));
  }
  return PlanarFile{PlanarBody(a0, std::move(cos_terms), std::move(sin_terms)), alpha, vertices, output};
}

PlanarFile load_planar(const std::filesystem::path& path)
{
  return parse_planar(read_json(path));
}

json to_json(const Vec& v)
{
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(finite_or_null(v[i]));
  }
  return out;
}

json to_json(const TheoremReport& report)
{
  json apexes = json::array();
  std::size_t passing = 0;
  for (const ApexRecord& r : report.apexes) {
    passing += r.pass ? 1 : 0;
    json item = {
        {"index", r.index},
        {"x", to_json(r.x)},
        {"y", r.y ? to_json(*r.y) : json(nullptr)},
        {"distance", finite_or_null(r.distance)},
        {"pass", r.pass},
        {"ratio", r.ratio ? finite_or_null(*r.ratio) : json(nullptr)},
        {"center_defect", r.center_defect ? finite_or_null(*r.center_defect) : json(nullptr)},
        {"unit_inverse", r.unit_inverse ? json(*r.unit_inverse) : json(nullptr)},
    };
    if (!r.error.empty()) {
      item["error"] = r.error;
    }
    apexes.push_back(std::move(item));
  }
  const Conclusion& c = report.conclusion;
  return json{
      {"verdict", to_string(report.verdict)},
      {"hypothesis_pass", report.hypothesis_pass},
      {"summary",
       {{"apexes", report.apexes.size()}, {"passing", passing}, {"max_distance", finite_or_null(report.max_distance())}}},
      {"conclusion",
       {{"k_center", to_json(c.k_center)},
        {"l_center", to_json(c.l_center)},
        {"k_asymmetry", finite_or_null(c.k_asymmetry)},
        {"l_symmetry_defect", finite_or_null(c.l_symmetry_defect)},
        {"concentricity_defect", finite_or_null(c.concentricity_defect)},
        {"unit_inverse_fraction", c.unit_inverse_fraction}}},
      {"apexes", std::move(apexes)},
  };
}

json to_json(const PathRecord& record)
{
  json grid = json::array();
  for (std::size_t i = 0; i < record.t.size(); ++i) {
    json row = {{"t", record.t[i]},
                {"d", record.d[i]},
                {"r", record.r[i]},
                {"diam_alpha", record.diam_alpha[i]},
                {"diam_beta", record.diam_beta[i]}};
    if (i < record.partner_distance.size()) {
      row["partner_distance"] = finite_or_null(record.partner_distance[i]);
    }
    grid.push_back(std::move(row));
  }
  return json{
      {"outcome", to_string(record.outcome)},
      {"t_star", record.t_star ? json(*record.t_star) : json(nullptr)},
      {"d_at_t_star", record.d_at_t_star},
      {"bisection_iterations", record.bisection_iterations},
      {"identity_defect", record.identity_defect()},
      {"partners_within_tolerance", record.partners_within_tolerance},
      {"grid", std::move(grid)},
  };
}

json to_json(const std::vector<SectionRecord>& records)
{
  json out = json::array();
  for (const SectionRecord& r : records) {
    json item = {{"direction", to_json(r.direction)}};
    if (r.error.empty()) {
      item["k_plus"] = to_json(r.k_plus);
      item["k_minus"] = to_json(r.k_minus);
      item["ratio"] = r.fit->ratio;
      item["center"] = to_json(r.fit->center);
      item["residual"] = r.fit->residual;
      item["chord_defect"] = r.chord_defect;
    } else {
      item["error"] = r.error;
    }
    out.push_back(std::move(item));
  }
  return out;
}

json to_json(const Remark2Report& report, double alpha, std::size_t count)
{
  return json{{"alpha", alpha},
              {"vertices", count},
              {"angle_defect", report.angle_defect},
              {"asymmetry_defect", report.asymmetry_defect},
              {"center", {report.center.x(), report.center.y()}}};
}

namespace {

void write_row(std::ostream& os, std::initializer_list<const Vec*> parts, std::size_t index)
{
  os << index;
  for (const Vec* v : parts) {
    for (Eigen::Index i = 0; i < v->size(); ++i) {
      os << ',' << (*v)[i];
    }
  }
  os << '\n';
}

std::string header(const char* name, int n)
{
  std::string out;
  for (int i = 1; i <= n; ++i) {
    out += "," + std::string(name) + std::to_string(i);
  }
  return out;
}

}  // namespace

void write_graze_csv(std::ostream& os, const Graze& graze)
{
  const DoubleCone cone = direction_set(graze);
  const int n = graze.dim();
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  os << "azimuth" << header("u", n) << header("k", n) << header("d", n) << '\n';
  for (std::size_t i = 0; i < graze.contacts.size(); ++i) {
    write_row(os, {&graze.contacts[i].normal, &graze.contacts[i].point, &cone.directions[i]}, i);
  }
}

void write_theorem_csv(std::ostream& os, const TheoremReport& report)
{
  if (report.apexes.empty()) {
    return;
  }
  const int n = static_cast<int>(report.apexes.front().x.size());
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  os << "index" << header("x", n) << header("y", n) << ",distance,ratio\n";
  for (const ApexRecord& r : report.apexes) {
    const Vec y = r.y ? *r.y : Vec(Vec::Constant(n, std::numeric_limits<double>::quiet_NaN()));
    os << r.index;
    for (int i = 0; i < n; ++i) {
      os << ',' << r.x[i];
    }
    for (int i = 0; i < n; ++i) {
      os << ',' << y[i];
    }
    os << ',' << r.distance << ',' << (r.ratio ? *r.ratio : std::numeric_limits<double>::quiet_NaN()) << '\n';
  }
}

void write_isoptic_csv(std::ostream& os, const IsopticCurve& curve)
{
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  os << "theta,z1,z2\n";
  for (std::size_t i = 0; i < curve.vertices.size(); ++i) {
    os << curve.theta[i] << ',' << curve.vertices[i].x() << ',' << curve.vertices[i].y() << '\n';
  }
}

}  // namespace dcone
