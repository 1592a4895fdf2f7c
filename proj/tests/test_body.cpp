#include "dcone/body.hpp"
#include "dcone/error.hpp"
#include "dcone/sampling.hpp"

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

std::vector<ConvexBody> zoo()
{
  Mat tilted(3, 3);
  tilted << 2.0, 0.5, 0.3, 0.5, 1.5, 0.2, 0.3, 0.2, 1.0;
  return {
      ConvexBody::unit_ball(3),
      ConvexBody::ellipsoid(diag(4, 1, 1), vec({1, 0, 0})),
      ConvexBody::ellipsoid(tilted, vec({0.5, -0.3, 0.2})),
      ConvexBody::lp_ball(4.0, 1.0, Vec::Zero(3)),
      ConvexBody::lp_ball(1.5, 2.0, vec({0, 1, 0})),
      ConvexBody::minkowski_sum({ConvexBody::unit_ball(3), ConvexBody::ellipsoid(diag(4, 1, 1), Vec::Zero(3))}),
  };
}

}  // namespace

TEST(Support, EllipsoidAxis)
{
  EXPECT_NEAR(ConvexBody::ellipsoid(diag(4, 1, 1), Vec::Zero(3)).support(vec({1, 0, 0})), 2.0, 1e-15);
}

TEST(Support, UnitBallIsRadius)
{
  const ConvexBody ball = ConvexBody::lp_ball(2.0, 1.0, Vec::Zero(3));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    EXPECT_NEAR(ball.support(oracle::random_unit(rng, 3)), 1.0, 1e-14);
  }
}

TEST(Support, MinkowskiAdditive)
{
  const ConvexBody sum =
      ConvexBody::minkowski_sum({ConvexBody::unit_ball(3), ConvexBody::ellipsoid(diag(4, 1, 1), Vec::Zero(3))});
  EXPECT_NEAR(sum.support(vec({1, 0, 0})), 3.0, 1e-15);
}

TEST(Support, PositivelyHomogeneous)
{
  for (const ConvexBody& body : zoo()) {
    const Vec u = vec({0.3, -0.4, 0.5});
    EXPECT_NEAR(body.support(2.5 * u), 2.5 * body.support(u), 1e-13);
  }
}

TEST(SupportGradient, Examples)
{
  EXPECT_LT((ConvexBody::unit_ball(3).support_gradient(vec({0, 0, 1})) - vec({0, 0, 1})).norm(), 1e-15);
  const ConvexBody e = ConvexBody::ellipsoid(diag(4, 1, 1), Vec::Zero(3));
  EXPECT_LT((e.support_gradient(vec({1, 0, 0})) - vec({2, 0, 0})).norm(), 1e-15);
  const Vec u = vec({1, 1, 0}) / std::sqrt(2.0);
  const Vec expected = vec({4 / std::sqrt(5.0), 1 / std::sqrt(5.0), 0});
  EXPECT_LT((e.support_gradient(u) - expected).norm(), 1e-14);
  const Vec fd = oracle::fd_gradient([&](const Vec& v) { return e.support(v); }, u, 1e-6);
  EXPECT_LT((fd - expected).norm(), 1e-8);
}

TEST(SupportGradient, MatchesFiniteDifferences)
{
  std::mt19937_64 rng(11);
  for (const ConvexBody& body : zoo()) {
    for (int i = 0; i < 200; ++i) {
      const Vec u = oracle::random_unit(rng, 3);
      const Vec fd = oracle::fd_gradient([&](const Vec& v) { return body.support(v); }, u, 1e-6);
      EXPECT_LT((fd - body.support_gradient(u)).norm(), 1e-5);
    }
  }
}

TEST(SupportGradient, EulerRelation)
{
  std::mt19937_64 rng(12);
  for (const ConvexBody& body : zoo()) {
    for (int i = 0; i < 1000; ++i) {
      const Vec u = oracle::random_unit(rng, 3);
      ASSERT_NEAR(body.support_gradient(u).dot(u), body.support(u), 1e-10);
    }
  }
}

TEST(SupportGradient, Sublinear)
{
  std::mt19937_64 rng(13);
  for (const ConvexBody& body : zoo()) {
    for (int i = 0; i < 1000; ++i) {
      const Vec u = oracle::random_unit(rng, 3);
      const Vec v = oracle::random_unit(rng, 3);
      ASSERT_LE(body.support(u + v), body.support(u) + body.support(v) + 1e-10);
    }
  }
}

TEST(SupportGradient, StrictlyConvexContacts)
{
  std::mt19937_64 rng(14);
  for (const ConvexBody& body : zoo()) {
    for (int i = 0; i < 200; ++i) {
      const Vec u = oracle::random_unit(rng, 3);
      const Vec v = oracle::random_unit(rng, 3);
      if (std::abs(u.dot(v)) > 1.0 - 1e-6) {
        continue;
      }
      EXPECT_GT((body.support_gradient(u) - body.support_gradient(v)).norm(), 0.0);
    }
  }
}

TEST(Body, RejectsBadInput)
{
  EXPECT_THROW(ConvexBody::lp_ball(1.0, 1.0, Vec::Zero(3)), GeometryError);
  EXPECT_THROW(ConvexBody::lp_ball(std::numeric_limits<double>::infinity(), 1.0, Vec::Zero(3)), GeometryError);
  EXPECT_THROW(ConvexBody::ellipsoid(diag(1, -1, 1), Vec::Zero(3)), GeometryError);
  Mat skew = diag(1, 1, 1);
  skew(0, 1) = 0.5;
  EXPECT_THROW(ConvexBody::ellipsoid(skew, Vec::Zero(3)), GeometryError);
}

TEST(Hyperplane, SupportsBody)
{
  const ConvexBody e = ConvexBody::ellipsoid(diag(4, 1, 1), vec({1, 0, 0}));
  const Hyperplane plane = supporting_hyperplane(e, vec({0, 0, 2}));
  EXPECT_NEAR(plane.normal.norm(), 1.0, 1e-15);
  EXPECT_NEAR(plane.offset, 1.0, 1e-15);
  EXPECT_NEAR(plane.evaluate(e.support_gradient(plane.normal)), 0.0, 1e-15);
}

TEST(CentralAsymmetry, Examples)
{
  const PointList samples = default_directions(3);
  EXPECT_NEAR(central_asymmetry(ConvexBody::ellipsoid(diag(4, 1, 1), vec({1, 2, 3})), vec({1, 2, 3}), samples), 0.0,
              1e-13);
  EXPECT_NEAR(central_asymmetry(ConvexBody::ellipsoid(diag(4, 1, 1), vec({1, 0, 0})), Vec::Zero(3), samples), 2.0,
              1e-14);
  EXPECT_NEAR(central_asymmetry(ConvexBody::unit_ball(3), vec({0.5, 0, 0}), samples), 1.0, 1e-14);
}

TEST(EstimateCenter, Examples)
{
  const PointList samples = default_directions(3);
  EXPECT_LT((estimate_center(ConvexBody::ellipsoid(diag(4, 1, 1), vec({1, 2, 3})), samples) - vec({1, 2, 3})).norm(),
            1e-12);
  EXPECT_LT(estimate_center(ConvexBody::unit_ball(3), samples).norm(), 1e-14);
  const ConvexBody pair = ConvexBody::minkowski_sum(
      {ConvexBody::lp_ball(2.0, 1.0, vec({1, 0, 0})), ConvexBody::lp_ball(2.0, 1.0, vec({-1, 0, 0}))});
  EXPECT_LT(estimate_center(pair, samples).norm(), 1e-14);
}

TEST(EstimateCenter, NeedsSpanningSamples)
{
  const PointList flat = {vec({1, 0, 0}), vec({0, 1, 0}), vec({-1, 0, 0})};
  EXPECT_THROW(estimate_center(ConvexBody::unit_ball(3), flat), GeometryError);
}
