// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "dcone/cone.hpp"
#include "dcone/homothety.hpp"
#include "dcone/isoptic.hpp"
#include "dcone/sampling.hpp"
#include "dcone/scenario_io.hpp"
#include "dcone/verifier.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>

using namespace dcone;

namespace {

const std::filesystem::path kScenarios = DCONE_SCENARIO_DIR;

struct Outcome
{
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args)
{
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Mat diag(double a, double b, double c)
{
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

const char* const kSymmetric[] = {"concentric-ball.json", "ellipsoid-axes.json", "ellipsoid-tilted.json",
                                  "lp4-ball.json", "minkowski-sum.json"};

Outcome ball_graze()
{
  const Graze g = graze(ConvexBody::unit_ball(3), vec({2, 0, 0}), 256);
  double k1 = 0.0;
  double norm = 0.0;
  for (const Contact& c : g.contacts) {
    k1 = std::max(k1, std::abs(c.point[0] - 0.5));
    norm = std::max(norm, std::abs(c.point.norm() - 1.0));
  }
  const double diam = std::abs(graze_diameter(g) - std::sqrt(3.0));
  return {g.contacts.size() == 256 && k1 < 1e-9 && norm < 1e-9 && diam < 1e-9,
          fmt("max|k1-0.5|=%.2e max|‖k‖-1|=%.2e |diam-√3|=%.2e", k1, norm, diam)};
}

Outcome ellipsoid_polar()
{
  const Vec x = vec({4, 0, 0});
  const Graze g = graze(ConvexBody::ellipsoid(diag(4, 1, 1), Vec::Zero(3)), x, 256);
  const Mat q = diag(0.25, 1, 1);
  double polar = 0.0;
  for (const Contact& c : g.contacts) {
    polar = std::max(polar, std::abs(c.point.dot(q * x) - 1.0));
  }
  const double diam = std::abs(graze_diameter(g) - std::sqrt(3.0));
  return {g.contacts.size() == 256 && polar < 1e-8 && diam < 1e-8,
          fmt("max|kᵀQx-1|=%.2e |diam-√3|=%.2e", polar, diam)};
}

Outcome cone_congruence()
{
  const ConvexBody ball = ConvexBody::unit_ball(3);
  auto cone = [&](double a) { return direction_set(graze(ball, vec({a, 0, 0}), 256)); };
  const double mirrored = cone_translation_distance(cone(2), cone(-2));
  const double coaxial = cone_translation_distance(cone(2), cone(-3));
  const double err = std::abs(coaxial - (std::asin(0.5) - std::asin(1.0 / 3.0)));
  return {mirrored < 1e-9 && err < 1e-6, fmt("d(2,-2)=%.2e |d(2,-3)-expected|=%.2e", mirrored, err)};
}

Outcome forward_check()
{
  bool pass = true;
  double worst_distance = 0.0;
  double worst_ratio = 0.0;
  double worst_center = 0.0;
  std::string verdicts;
  for (const char* name : kSymmetric) {
    const Scenario s = load_scenario(kScenarios / name).scenario;
    pass = pass && s.samples == 200 && s.meridians == 256;
    const TheoremReport r = check_theorem(s);
    pass = pass && r.verdict == Verdict::Verified;
    verdicts += to_string(r.verdict).substr(0, 1);
    for (const ApexRecord& a : r.apexes) {
      worst_distance = std::max(worst_distance, a.distance);
      if (!a.ratio) {
        pass = false;
        continue;
      }
      worst_ratio = std::max(worst_ratio, std::abs(*a.ratio + 1.0));
    }
    worst_center = std::max(worst_center, r.conclusion.concentricity_defect);
  }
  pass = pass && worst_distance < 1e-6 && worst_ratio < 1e-6 && worst_center < 1e-6;
  return {pass, fmt("verdicts=%s max distance=%.2e max|ratio+1|=%.2e max concentricity=%.2e", verdicts.c_str(),
                    worst_distance, worst_ratio, worst_center)};
}

Outcome negative_sensitivity()
{
  const Scenario base = load_scenario(kScenarios / "concentric-ball.json").scenario;
  double previous = -1.0;
  bool monotone = true;
  bool failed_at_03 = false;
  std::string maxima;
  for (double offset : {0.1, 0.3, 0.5}) {
    Scenario s{base.body, StarSurface::sphere(vec({offset, 0, 0}), base.surface.base_radius())};
    s.samples = base.samples;
    s.meridians = base.meridians;
    const TheoremReport r = check_theorem(s);
    const double worst = r.max_distance();
    if (offset == 0.3) {
      failed_at_03 = r.verdict == Verdict::HypothesisFailed && worst > 0.01;
    }
    monotone = monotone && worst > previous;
    previous = worst;
    maxima += fmt(" %.4f", worst);
  }
  return {monotone && failed_at_03, "max distance at offsets 0.1/0.3/0.5:" + maxima};
}

Outcome parallel_chords()
{
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  int count = 0;
  for (const char* name : kSymmetric) {
    const Scenario s = load_scenario(kScenarios / name).scenario;
    const PointList apexes = s.surface.sample(s.samples, s.seed);
    for (int t = 0; t < 20; ++t) {
      const Vec& x = apexes[rng() % apexes.size()];
      const PartnerResult partner = find_partner(s, x);
      const CorrespondedPair p = paired_graze(s.body, x, partner.y, s.tolerances.congruence, s.meridians);
      const std::size_t i = rng() % p.k.size();
      const std::size_t j = (i + 1 + rng() % (p.k.size() - 1)) % p.k.size();
      worst = std::max(worst, parallel_defect(p.k[i], p.k[j], p.l[i], p.l[j]));
      ++count;
    }
  }
  return {count == 100 && worst < 1e-6, fmt("%d chord pairs, max parallel defect=%.2e", count, worst)};
}

Outcome homothety_exact()
{
  std::mt19937_64 rng(7);
  const Vec c = vec({1, 0, 0});
  PointList from;
  PointList to;
  for (int i = 0; i < 10; ++i) {
    const Vec k = 1.5 * oracle::random_unit(rng, 3) + vec({0.2, 0.7, -0.4});
    from.push_back(k);
    to.push_back(c + (-2.0) * (k - c));
  }
  const HomothetyFit fit = homothety_fit(from, to);
  const double dl = std::abs(fit.ratio + 2.0);
  const double dc = (fit.center - c).norm();
  return {fit.residual < 1e-12 && dl < 1e-9 && dc < 1e-9,
          fmt("residual=%.2e |λ+2|=%.2e |c-c*|=%.2e", fit.residual, dl, dc)};
}

Outcome path_machinery()
{
  Scenario s = load_scenario(kScenarios / "ellipsoid-axes.json").scenario;
  s.samples = 50;
  const PathRecord path = appendix_path_search(s, s.surface.point_at(vec({1, 0, 0})), s.surface.point_at(vec({0, 1, 0})));
  const PathRecord synthetic = path_record([](double t) { return DiameterPair{1.0 + t * t, 1.3 - 0.2 * t}; });
  const bool root = synthetic.outcome == PathOutcome::Root && std::abs(synthetic.d_at_t_star) < 1e-8 &&
                    synthetic.bisection_iterations <= 40;
  return {path.t.size() == 33 && path.identity_defect() < 1e-9 && root,
          fmt("identity defect=%.2e on %zu points; synthetic |d(t*)|=%.2e after %d iterations", path.identity_defect(),
              path.t.size(), std::abs(synthetic.d_at_t_star), synthetic.bisection_iterations)};
}

Outcome planar_isoptic()
{
  const PlanarBody egg(1.0, {0.0, 0.0, 0.1}, {});
  const Remark2Report r = remark2_report(egg, std::numbers::pi / 2, 256);
  double radius = 0.0;
  for (const Point2& z : isoptic_curve(PlanarBody::disk(1.0), std::numbers::pi / 2, 256).vertices) {
    radius = std::max(radius, std::abs(z.norm() - std::sqrt(2.0)));
  }
  const double asym = std::abs(r.asymmetry_defect - 0.2);
  return {r.angle_defect < 1e-6 && asym < 1e-9 && radius < 1e-9,
          fmt("angle defect=%.2e |asymmetry-0.2|=%.2e |disk radius-√2|=%.2e", r.angle_defect, asym, radius)};
}

Outcome section_scan()
{
  const PointList dirs = sphere_grid(3, 64);
  const Scenario ball = load_scenario(kScenarios / "concentric-ball.json").scenario;
  double ratio = 0.0;
  double chord = 0.0;
  bool errors = false;
  for (const SectionRecord& r : conjecture1_scan(ball, dirs)) {
    if (!r.error.empty()) {
      errors = true;
      continue;
    }
    ratio = std::max(ratio, std::abs(r.fit->ratio + 1.0));
    chord = std::max(chord, r.chord_defect);
  }
  const Scenario offset = load_scenario(kScenarios / "offset-sphere.json").scenario;
  double offset_chord = 0.0;
  for (const SectionRecord& r : conjecture1_scan(offset, dirs)) {
    errors = errors || !r.error.empty();
    offset_chord = std::max(offset_chord, r.chord_defect);
  }
  return {!errors && ratio < 1e-6 && chord < 1e-6 && offset_chord > 0.05,
          fmt("concentric max|ratio+1|=%.2e max chord defect=%.2e; offset max chord defect=%.3f", ratio, chord,
              offset_chord)};
}

Outcome hygiene()
{
  Mat tilted(3, 3);
  tilted << 2.0, 0.5, 0.3, 0.5, 1.5, 0.2, 0.3, 0.2, 1.0;
  const std::vector<ConvexBody> bodies = {
      ConvexBody::unit_ball(3),
      ConvexBody::ellipsoid(tilted, vec({0.5, -0.3, 0.2})),
      ConvexBody::lp_ball(4.0, 1.0, Vec::Zero(3)),
      ConvexBody::minkowski_sum({ConvexBody::unit_ball(3), ConvexBody::ellipsoid(diag(4, 1, 1), Vec::Zero(3))}),
  };
  std::mt19937_64 rng(99);
  double fd = 0.0;
  double euler = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ConvexBody& body = bodies[static_cast<std::size_t>(i) % bodies.size()];
    const Vec u = oracle::random_unit(rng, 3);
    const Vec g = body.support_gradient(u);
    fd = std::max(fd, (oracle::fd_gradient([&](const Vec& v) { return body.support(v); }, u, 1e-6) - g).norm());
    euler = std::max(euler, std::abs(g.dot(u) - body.support(u)));
  }
  Scenario s = load_scenario(kScenarios / "lp4-ball.json").scenario;
  s.samples = 40;
  s.meridians = 128;
  s.seed = 5;
  const std::string first = to_json(check_theorem(s)).dump();
  const std::string second = to_json(check_theorem(s)).dump();
  const bool same = first == second;
  return {fd < 1e-5 && euler < 1e-10 && same,
          fmt("max FD gap=%.2e max Euler gap=%.2e reports identical=%s", fd, euler, same ? "yes" : "no")};
}

}  // namespace

int main()
{
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"ball graze oracle", ball_graze},
      {"ellipsoid polar-plane oracle", ellipsoid_polar},
      {"cone congruence", cone_congruence},
      {"theorem forward check on 5 symmetric scenarios", forward_check},
      {"negative sensitivity to an offset surface", negative_sensitivity},
      {"parallel corresponded chords", parallel_chords},
      {"homothety fit exactness", homothety_exact},
      {"path diameter identity and bisection", path_machinery},
      {"planar isoptic without symmetry", planar_isoptic},
      {"section scan", section_scan},
      {"numerical hygiene", hygiene},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += outcome.pass ? 0 : 1;
    std::printf("%s criterion %d: %s -- %s (%.1fs)\n", outcome.pass ? "PASS" : "FAIL", index, name,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
