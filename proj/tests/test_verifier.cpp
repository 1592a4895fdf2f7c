#include "dcone/error.hpp"
#include "dcone/sampling.hpp"
#include "dcone/verifier.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dcone;

namespace {

Mat diag(double a, double b, double c)
{
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

Scenario make(ConvexBody body, StarSurface surface, std::size_t n = 50, int m = 128)
{
  Scenario s{std::move(body), std::move(surface)};
  s.samples = n;
  s.meridians = m;
  return s;
}

Scenario ball_in_sphere(const Vec& offset = Vec::Zero(3), std::size_t n = 50)
{
  return make(ConvexBody::unit_ball(3), StarSurface::sphere(offset, 3.0), n);
}

Scenario ellipsoid_in_sphere(std::size_t n = 50)
{
  return make(ConvexBody::ellipsoid(diag(4, 1, 1), Vec::Zero(3)), StarSurface::sphere(Vec::Zero(3), 5.0), n);
}

}  // namespace

TEST(Scenario, Validation)
{
  EXPECT_NO_THROW(ball_in_sphere().validate());
  Scenario tight = make(ConvexBody::unit_ball(3), StarSurface::sphere(Vec::Zero(3), 1.0005));
  EXPECT_THROW(tight.validate(), GeometryError);
  Scenario few = ball_in_sphere();
  few.samples = 4;
  EXPECT_THROW(few.validate(), GeometryError);
  Scenario flat = make(ConvexBody::unit_ball(2), StarSurface::sphere(Vec::Zero(2), 3.0));
  EXPECT_THROW(flat.validate(), GeometryError);
  Scenario zero_tol = ball_in_sphere();
  zero_tol.tolerances.ratio = 0.0;
  EXPECT_THROW(zero_tol.validate(), GeometryError);
}

TEST(Partner, BallAntipode)
{
  const PartnerResult r = find_partner(ball_in_sphere(), vec({3, 0, 0}));
  EXPECT_LT((r.y - vec({-3, 0, 0})).norm(), 1e-6);
  EXPECT_LT(r.distance, 1e-9);
}

TEST(Partner, EllipsoidAgreesWithDenseGrid)
{
  const Scenario s = ellipsoid_in_sphere();
  const PartnerSearch search(s);
  const Vec x = s.surface.point_at(vec({0.6, -0.48, 0.64}));
  const PartnerResult r = search.find(x);
  EXPECT_LT((r.y + x).norm(), 1e-6);
  EXPECT_LT(r.distance, 1e-6);

  auto cone_of = [&](const Vec& apex) { return direction_set(graze(s.body, apex, 32)).directions; };
  auto point = [&](const Vec& w) { return s.surface.point_at(w); };
  const oracle::DensePartner dense = oracle::dense_partner(cone_of, point, x, Vec::Zero(3), 400);
  // the grid optimum sits next to the refined partner
  EXPECT_LT((dense.y - r.y).norm(), 0.5);
}

TEST(Partner, OffsetSphereHasNoTranslate)
{
  const Scenario s = ball_in_sphere(vec({0.5, 0, 0}));
  const Vec x = vec({3.5, 0, 0});
  const PartnerResult r = find_partner(s, x);
  EXPECT_GT(r.distance, 0.01);

  auto cone_of = [&](const Vec& apex) { return direction_set(graze(s.body, apex, 32)).directions; };
  auto point = [&](const Vec& w) { return s.surface.point_at(w); };
  EXPECT_GT(oracle::dense_partner(cone_of, point, x, Vec::Zero(3), 400).distance, 0.01);
}

TEST(Partner, UniqueAndReflected)
{
  const Vec c = vec({0.5, -0.3, 0.2});
  const Scenario s = make(ConvexBody::lp_ball(4.0, 1.0, c), StarSurface::sphere(c, 3.0), 24);
  const PartnerSearch search(s);
  for (const Vec& x : search.grid()) {
    EXPECT_LT((search.find(x).y - (2.0 * c - x)).norm(), 1e-5);
  }
}

TEST(Hypothesis, ConcentricPassesOffsetFails)
{
  for (const Scenario& s : {ball_in_sphere(), ellipsoid_in_sphere()}) {
    const std::vector<ApexRecord> records = verify_hypothesis(s);
    ASSERT_EQ(records.size(), 50u);
    for (const ApexRecord& r : records) {
      EXPECT_TRUE(r.pass) << r.index << " " << r.distance;
    }
  }
  const std::vector<ApexRecord> offset = verify_hypothesis(ball_in_sphere(vec({0.5, 0, 0})));
  EXPECT_TRUE(std::any_of(offset.begin(), offset.end(), [](const ApexRecord& r) { return !r.pass; }));
}

TEST(Conclusion, ConcentricVerified)
{
  const TheoremReport ball = check_theorem(ball_in_sphere());
  EXPECT_EQ(ball.verdict, Verdict::Verified);
  EXPECT_LT(ball.conclusion.k_center.norm(), 1e-9);
  EXPECT_LT(ball.conclusion.l_center.norm(), 1e-9);
  EXPECT_EQ(ball.conclusion.unit_inverse_fraction, 1.0);
  for (const ApexRecord& r : ball.apexes) {
    ASSERT_TRUE(r.ratio.has_value());
    EXPECT_NEAR(*r.ratio, -1.0, 1e-6);
  }
  const TheoremReport ellipsoid = check_theorem(ellipsoid_in_sphere());
  EXPECT_EQ(ellipsoid.verdict, Verdict::Verified);
  EXPECT_LT(ellipsoid.conclusion.concentricity_defect, 1e-6);
}

TEST(Conclusion, HypothesisFailureStillReportsDiagnostics)
{
  const TheoremReport r = check_theorem(ball_in_sphere(vec({0.5, 0, 0})));
  EXPECT_EQ(r.verdict, Verdict::HypothesisFailed);
  EXPECT_FALSE(r.hypothesis_pass);
  EXPECT_NEAR(r.conclusion.concentricity_defect, 0.5, 1e-6);
  EXPECT_GT(r.max_distance(), 0.01);
}

TEST(Conclusion, VerdictStrings)
{
  EXPECT_EQ(to_string(Verdict::Verified), "verified");
  EXPECT_EQ(to_string(Verdict::HypothesisFailed), "hypothesis-failed");
  EXPECT_EQ(to_string(Verdict::ConclusionFailed), "conclusion-failed");
}

TEST(Bisection, FindsRootWithinBudget)
{
  auto f = [](double t) { return std::cos(3.0 * t) - 0.2; };
  const RootResult r = bisect_sign_change(f, 0.0, 1.0, f(0.0), f(1.0));
  EXPECT_TRUE(r.converged);
  EXPECT_LT(std::abs(r.value), 1e-8);
  EXPECT_LE(r.iterations, 40);
  EXPECT_NEAR(r.t, std::acos(0.2) / 3.0, 1e-8);
}

TEST(PathRecord, SyntheticIdentityAndRoot)
{
  const PathRecord record = path_record([](double t) { return DiameterPair{1.0 + t * t, 1.3 - 0.2 * t}; });
  ASSERT_EQ(record.t.size(), 33u);
  EXPECT_LT(record.identity_defect(), 1e-12);
  ASSERT_EQ(record.outcome, PathOutcome::Root);
  ASSERT_TRUE(record.t_star.has_value());
  // 1 + t^2 = 1.3 - 0.2 t
  EXPECT_NEAR(*record.t_star, (-0.2 + std::sqrt(0.04 + 1.2)) / 2.0, 1e-7);
  EXPECT_LT(std::abs(record.d_at_t_star), 1e-8);
  EXPECT_LE(record.bisection_iterations, 40);

  const PathRecord flat = path_record([](double) { return DiameterPair{1.0, 1.0}; });
  EXPECT_EQ(flat.outcome, PathOutcome::Degenerate);
  EXPECT_EQ(flat.t_star.value(), 0.5);

  const PathRecord none = path_record([](double t) { return DiameterPair{1.0, 2.0 + t}; });
  EXPECT_EQ(none.outcome, PathOutcome::NoRoot);
}

TEST(PathSearch, ConcentricBallIsDegenerate)
{
  const Scenario s = ball_in_sphere(Vec::Zero(3), 24);
  const PathRecord r = appendix_path_search(s, vec({3, 0, 0}), vec({0, 0, -3}));
  EXPECT_EQ(r.outcome, PathOutcome::Degenerate);
  for (double d : r.d) {
    EXPECT_LT(std::abs(d), 1e-8);
  }
}

TEST(PathSearch, EllipsoidLongToShortAxis)
{
  const Scenario s = ellipsoid_in_sphere(24);
  const PathRecord r = appendix_path_search(s, vec({5, 0, 0}), vec({0, 5, 0}));
  EXPECT_LT(r.identity_defect(), 1e-9);
  EXPECT_NE(r.outcome, PathOutcome::NoRoot);
  if (r.outcome == PathOutcome::Root) {
    EXPECT_LT(std::abs(r.d_at_t_star), 1e-8);
  }
  // oracle: d sampled on the grid changes sign or vanishes
  const auto [lo, hi] = std::minmax_element(r.d.begin(), r.d.end());
  EXPECT_LE(*lo * *hi, 1e-16);
}

TEST(PathSearch, OffsetScenarioKeepsIdentity)
{
  Scenario s = ball_in_sphere(vec({0.3, 0, 0}), 24);
  s.tolerances.congruence = 1e-1;
  const PathRecord r = appendix_path_search(s, s.surface.point_at(vec({1, 0, 0})), s.surface.point_at(vec({-1, 0, 0})), 1e-1);
  EXPECT_LT(r.identity_defect(), 1e-9);
}

TEST(Sections, ConcentricBallCircles)
{
  const Scenario s = ball_in_sphere();
  const PointList dirs = {vec({1, 0, 0})};
  const std::vector<SectionRecord> records = conjecture1_scan(s, dirs, 64);
  ASSERT_EQ(records.size(), 1u);
  const SectionRecord& r = records.front();
  ASSERT_TRUE(r.error.empty()) << r.error;
  for (const Vec& p : r.loop_plus) {
    EXPECT_NEAR(p[0], 1.0, 1e-9);
    EXPECT_NEAR(std::hypot(p[1], p[2]), std::sqrt(8.0), 1e-9);
  }
  EXPECT_NEAR(r.fit->ratio, -1.0, 1e-9);
  EXPECT_LT(r.fit->center.norm(), 1e-9);
  EXPECT_LT(r.chord_defect, 1e-9);
}

TEST(Sections, EllipsoidAllDirections)
{
  const Scenario s = ellipsoid_in_sphere();
  for (const SectionRecord& r : conjecture1_scan(s, sphere_grid(3, 20), 64)) {
    ASSERT_TRUE(r.error.empty()) << r.error;
    EXPECT_NEAR(r.fit->ratio, -1.0, 1e-6);
    EXPECT_LT(r.fit->center.norm(), 1e-6);
  }
}

TEST(Sections, OffsetSphereMissesChord)
{
  const Scenario s = ball_in_sphere(vec({0.2, 0, 0}));
  double worst = 0.0;
  for (const SectionRecord& r : conjecture1_scan(s, sphere_grid(3, 20), 64)) {
    ASSERT_TRUE(r.error.empty()) << r.error;
    worst = std::max(worst, r.chord_defect);
  }
  EXPECT_GT(worst, 0.0);
}

TEST(Sections, DistanceToSegment)
{
  EXPECT_NEAR(distance_to_segment(vec({0, 1, 0}), vec({-1, 0, 0}), vec({1, 0, 0})), 1.0, 1e-15);
  EXPECT_NEAR(distance_to_segment(vec({3, 0, 0}), vec({-1, 0, 0}), vec({1, 0, 0})), 2.0, 1e-15);
}
