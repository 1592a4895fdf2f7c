#include "dcone/cli.hpp"

#include "dcone/error.hpp"
#include "dcone/isoptic.hpp"
#include "dcone/sampling.hpp"
#include "dcone/verifier.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace dcone {

namespace {

struct Check
{
  std::string name;
  double value;  ///< worst observed defect
  double bound;
};

Check ball_graze()
{
  const Graze g = graze(ConvexBody::unit_ball(3), vec({2.0, 0.0, 0.0}), 256);
  double worst = std::abs(graze_diameter(g) - std::sqrt(3.0));
  for (const Contact& c : g.contacts) {
    worst = std::max({worst, std::abs(c.point[0] - 0.5), std::abs(c.point.norm() - 1.0)});
  }
  return {"ball-graze", worst, 1e-9};
}

Check ellipsoid_graze()
{
  // h(u) = sqrt(u^T A u) with A = Q^{-1}, Q = diag(1/4, 1, 1).
  Mat shape = Mat::Identity(3, 3);
  shape(0, 0) = 4.0;
  const Vec x = vec({4.0, 0.0, 0.0});
  const Graze g = graze(ConvexBody::ellipsoid(shape, Vec::Zero(3)), x, 256);
  double worst = std::abs(graze_diameter(g) - std::sqrt(3.0));
  for (const Contact& c : g.contacts) {
    const double polar = 0.25 * c.point[0] * x[0] + c.point[1] * x[1] + c.point[2] * x[2];
    worst = std::max(worst, std::abs(polar - 1.0));
  }
  return {"ellipsoid-polar-plane", worst, 1e-8};
}

Check cone_congruence()
{
  const ConvexBody ball = ConvexBody::unit_ball(3);
  auto cone = [&](double a) { return direction_set(graze(ball, vec({a, 0.0, 0.0}), 256)); };
  const double mirrored = cone_translation_distance(cone(2.0), cone(-2.0));
  const double coaxial = cone_translation_distance(cone(2.0), cone(-3.0));
  const double expected = std::asin(0.5) - std::asin(1.0 / 3.0);
  return {"cone-congruence", std::max(mirrored * 1e3, std::abs(coaxial - expected)), 1e-6};
}

Check disk_isoptic()
{
  const PlanarBody disk = PlanarBody::disk(1.0);
  double worst = 0.0;
  for (int i = 1; i <= 10; ++i) {
    const double alpha = std::numbers::pi * i / 11.0;
    const IsopticCurve curve = isoptic_curve(disk, alpha, 64);
    for (const Point2& z : curve.vertices) {
      worst = std::max(worst, std::abs(z.norm() - 1.0 / std::sin(alpha / 2.0)));
    }
  }
  return {"disk-isoptic", worst, 1e-9};
}

Check egg_isoptic()
{
  const Remark2Report r = remark2_report(PlanarBody(1.0, {0.0, 0.0, 0.1}, {}), std::numbers::pi / 2.0, 256);
  return {"egg-isoptic", std::max(r.angle_defect * 1e3, std::abs(r.asymmetry_defect - 0.2)), 1e-6};
}

Check synthetic_homothety()
{
  const Vec c = vec({1.0, 0.0, 0.0});
  PointList from;
  PointList to;
  for (const Vec& p : default_directions(3, 64)) {
    const Vec k = vec({0.5, -0.25, 0.75}) + 1.5 * p;
    from.push_back(k);
    to.push_back(c - 2.0 * (k - c));
  }
  const HomothetyFit fit = homothety_fit(from, to);
  const double worst = std::max({std::abs(fit.ratio + 2.0), (fit.center - c).norm(), fit.residual * 1e3});
  return {"synthetic-homothety", worst, 1e-9};
}

Scenario sampled(const Vec& surface_center, const SelftestOptions& options)
{
  Scenario s{ConvexBody::unit_ball(3), StarSurface::sphere(surface_center, 3.0)};
  s.samples = 16;
  s.meridians = 64;
  s.seed = options.seed;
  s.tolerances.congruence = options.congruence_tol;
  return s;
}

/// value 0 when the verdict matches, 1 otherwise.
Check sampled_verdict(const std::string& name, const Scenario& s, Verdict expected)
{
  const TheoremReport report = check_theorem(s);
  return {name, report.verdict == expected ? 0.0 : 1.0, 0.5};
}

}  // namespace

nlohmann::json selftest_report(const SelftestOptions& options)
{
  const std::vector<std::pair<std::string, std::function<Check()>>> suite = {
      {"ball-graze", ball_graze},
      {"ellipsoid-polar-plane", ellipsoid_graze},
      {"cone-congruence", cone_congruence},
      {"disk-isoptic", disk_isoptic},
      {"egg-isoptic", egg_isoptic},
      {"synthetic-homothety", synthetic_homothety},
      {"sampled-ball-in-sphere",
       [&] { return sampled_verdict("sampled-ball-in-sphere", sampled(Vec::Zero(3), options), Verdict::Verified); }},
      {"sampled-offset-sphere",
       [&] {
         return sampled_verdict("sampled-offset-sphere", sampled(vec({0.3, 0.0, 0.0}), options),
                                Verdict::HypothesisFailed);
       }},
  };

  nlohmann::json checks = nlohmann::json::array();
  int passed = 0;
  int failed = 0;
  for (const auto& [name, run_check] : suite) {
    nlohmann::json item;
    try {
      const Check c = run_check();
      const bool pass = c.value < c.bound;
      item = {{"name", c.name}, {"pass", pass}, {"value", c.value}, {"bound", c.bound}};
    } catch (const std::exception& e) {
      item = {{"name", name}, {"pass", false}, {"error", e.what()}};
    }
    (item["pass"].get<bool>() ? passed : failed) += 1;
    checks.push_back(std::move(item));
  }
  return {{"checks", std::move(checks)}, {"passed", passed}, {"failed", failed}};
}

}  // namespace dcone
