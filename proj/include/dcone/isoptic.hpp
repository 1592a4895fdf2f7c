#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <vector>

namespace dcone {

using Point2 = Eigen::Vector2d;

/// Planar convex body given by its support function in polar angle,
/// p(theta) = a0 + sum_m (a_m cos m theta + b_m sin m theta).
/// Construction rejects series with p + p'' <= 0 somewhere on a 4096-point grid.
class PlanarBody
{
public:
  PlanarBody(double a0, std::vector<double> cos_terms, std::vector<double> sin_terms);

  static PlanarBody disk(double radius);

  double support(double theta) const;
  /// p(theta) + p''(theta), the radius of curvature.
  double curvature_radius(double theta) const;
  /// Steiner point (a1, b1), an interior point.
  Point2 steiner_point() const;

  double a0() const noexcept { return a0_; }
  const std::vector<double>& cos_terms() const noexcept { return cos_; }
  const std::vector<double>& sin_terms() const noexcept { return sin_; }

private:
  double a0_;
  std::vector<double> cos_;  ///< cos_[m-1] = a_m
  std::vector<double> sin_;  ///< sin_[m-1] = b_m
};

struct IsopticCurve
{
  double alpha = 0.0;
  std::vector<double> theta;
  std::vector<Point2> vertices;
};

/// Isoptic K_alpha: for each theta, the intersection of the support lines
/// with outer normals theta and theta + pi - alpha.
IsopticCurve isoptic_curve(const PlanarBody& body, double alpha, std::size_t count);

/// Angle under which the body is seen from z (strictly outside), in (0, pi).
double visual_angle(const PlanarBody& body, const Point2& z);

struct Remark2Report
{
  double angle_defect = 0.0;      ///< max |visual_angle - alpha| over isoptic vertices
  double asymmetry_defect = 0.0;  ///< min over c of max |p(t) - p(t+pi) - 2<c,u(t)>|
  Point2 center = Point2::Zero();  ///< minimizing c
};

/// Constant visual angle along the isoptic next to the central asymmetry
/// of the body: congruent planar support cones without symmetry.
Remark2Report remark2_report(const PlanarBody& body, double alpha, std::size_t count);

}  // namespace dcone
