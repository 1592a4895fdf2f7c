#include "dcone/error.hpp"
#include "dcone/isoptic.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dcone;

namespace {

const PlanarBody& egg()
{
  static const PlanarBody body(1.0, {0.0, 0.0, 0.1}, {});
  return body;
}

}  // namespace

TEST(Isoptic, DiskRadius)
{
  const PlanarBody disk = PlanarBody::disk(1.0);
  for (const Point2& z : isoptic_curve(disk, std::numbers::pi / 2, 64).vertices) {
    EXPECT_NEAR(z.norm(), std::sqrt(2.0), 1e-12);
  }
  for (const Point2& z : isoptic_curve(disk, std::numbers::pi / 3, 64).vertices) {
    EXPECT_NEAR(z.norm(), 2.0, 1e-12);
  }
  const PlanarBody big = PlanarBody::disk(1.7);
  for (int i = 1; i <= 10; ++i) {
    const double alpha = std::numbers::pi * i / 11.0;
    for (const Point2& z : isoptic_curve(big, alpha, 32).vertices) {
      EXPECT_NEAR(z.norm(), 1.7 / std::sin(alpha / 2), 1e-9);
    }
  }
}

TEST(Isoptic, EggVerticesSeeAlpha)
{
  for (double alpha : {std::numbers::pi / 2, 2.0 * std::numbers::pi / 3, 0.4, 2.9}) {
    for (std::size_t n : {64u, 1024u}) {
      for (const Point2& z : isoptic_curve(egg(), alpha, n).vertices) {
        ASSERT_NEAR(visual_angle(egg(), z), alpha, 1e-8);
      }
    }
  }
}

TEST(Isoptic, EggIsNotACircle)
{
  const IsopticCurve curve = isoptic_curve(egg(), std::numbers::pi / 2, 256);
  double lo = 1e9;
  double hi = 0.0;
  for (const Point2& z : curve.vertices) {
    lo = std::min(lo, z.norm());
    hi = std::max(hi, z.norm());
  }
  EXPECT_GT(hi - lo, 1e-3);
}

TEST(Isoptic, RejectsBadAngles)
{
  EXPECT_THROW(isoptic_curve(egg(), 0.0, 64), GeometryError);
  EXPECT_THROW(isoptic_curve(egg(), std::numbers::pi, 64), GeometryError);
  EXPECT_THROW(isoptic_curve(egg(), 1.0, 8), GeometryError);
}

TEST(VisualAngle, Disk)
{
  const PlanarBody disk = PlanarBody::disk(1.0);
  EXPECT_NEAR(visual_angle(disk, Point2(std::sqrt(2.0), 0)), std::numbers::pi / 2, 1e-12);
  EXPECT_NEAR(visual_angle(disk, Point2(2, 0)), std::numbers::pi / 3, 1e-12);
  EXPECT_NEAR(visual_angle(disk, Point2(10, 0)), 2 * std::asin(0.1), 1e-12);
  EXPECT_THROW(visual_angle(disk, Point2(0.5, 0)), GeometryError);
}

TEST(VisualAngle, MatchesEnvelopeOracle)
{
  auto p = [](double t) { return 1.0 + 0.1 * std::cos(3.0 * t); };
  for (const Point2& z : {Point2(1.6, 0.3), Point2(-0.2, 2.4), Point2(-3.0, -1.0)}) {
    EXPECT_NEAR(visual_angle(egg(), z), oracle::visual_angle_envelope(p, z), 1e-6);
  }
}

TEST(Asymmetry, DiskIsSymmetric)
{
  const Remark2Report r = remark2_report(PlanarBody::disk(1.0), std::numbers::pi / 2, 128);
  EXPECT_LT(r.angle_defect, 1e-9);
  EXPECT_NEAR(r.asymmetry_defect, 0.0, 1e-12);
}

TEST(Asymmetry, EggCongruentConesWithoutSymmetry)
{
  for (double alpha : {std::numbers::pi / 2, 2.0 * std::numbers::pi / 3}) {
    const Remark2Report r = remark2_report(egg(), alpha, 256);
    EXPECT_LT(r.angle_defect, 1e-6);
    EXPECT_NEAR(r.asymmetry_defect, 0.2, 1e-9);
  }
}

TEST(Asymmetry, FirstHarmonicIsAbsorbed)
{
  const PlanarBody shifted(1.0, {0.3, 0.0, 0.1}, {-0.2});
  const Remark2Report r = remark2_report(shifted, std::numbers::pi / 2, 128);
  EXPECT_NEAR(r.asymmetry_defect, 0.2, 1e-9);
  EXPECT_LT((r.center - Point2(0.3, -0.2)).norm(), 1e-6);
}

TEST(PlanarBody, ConvexityGuard)
{
  EXPECT_THROW(PlanarBody(1.0, {0.0, 0.0, 0.2}, {}), GeometryError);
  EXPECT_NO_THROW(PlanarBody(1.0, {0.0, 0.0, 0.1}, {}));
  EXPECT_NEAR(egg().curvature_radius(0.0), 0.2, 1e-15);
}
