#include "dcone/isoptic.hpp"

#include "dcone/error.hpp"
#include "dcone/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dcone {

namespace {

constexpr std::size_t kConvexityGrid = 4096;
constexpr std::size_t kScanGrid = 4096;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Point2 direction(double theta)
{
  return {std::cos(theta), std::sin(theta)};
}

/// Boundary of the arc {g < 0}: g(inside) < 0 <= g(outside).
double bisect_boundary(const PlanarBody& body, const Point2& z, double inside, double outside)
{
  for (int i = 0; i < 200 && std::abs(outside - inside) > 1e-16; ++i) {
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) {
      break;
    }
    if (body.support(mid) - direction(mid).dot(z) < 0.0) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return 0.5 * (inside + outside);
}

/// Continuous max over theta of |p(t) - p(t + pi) - 2 <c, u(t)>|: a grid
/// scan, then golden-section refinement of every grid peak that the
/// curvature bound cannot rule out.
class AsymmetryObjective
{
public:
  explicit AsymmetryObjective(const PlanarBody& body) : body_(body), odd_(kScanGrid)
  {
    for (std::size_t i = 0; i < kScanGrid; ++i) {
      odd_[i] = odd_part(theta(i));
    }
    for (std::size_t m = 1; m <= body.cos_terms().size(); ++m) {
      // only odd harmonics survive in p(t) - p(t + pi), with factor 2
      if (m % 2 == 1) {
        curvature_ += 2.0 * static_cast<double>(m * m) *
                      (std::abs(body.cos_terms()[m - 1]) + std::abs(body.sin_terms()[m - 1]));
      }
    }
  }

  double operator()(const Point2& c) const
  {
    const double h = kTwoPi / kScanGrid;
    std::vector<double> values(kScanGrid);
    double top = 0.0;
    for (std::size_t i = 0; i < kScanGrid; ++i) {
      values[i] = std::abs(odd_[i] - 2.0 * c.dot(direction(theta(i))));
      top = std::max(top, values[i]);
    }
    const double margin = 0.125 * h * h * (curvature_ + 2.0 * c.norm());
    double best = top;
    for (std::size_t i = 0; i < kScanGrid; ++i) {
      const double prev = values[(i + kScanGrid - 1) % kScanGrid];
      const double next = values[(i + 1) % kScanGrid];
      if (values[i] + margin >= top && values[i] >= prev && values[i] >= next) {
        best = std::max(best, refine(c, theta(i) - h, theta(i) + h));
      }
    }
    return best;
  }

private:
  static double theta(std::size_t i) { return kTwoPi * static_cast<double>(i) / kScanGrid; }

  double odd_part(double t) const { return body_.support(t) - body_.support(t + std::numbers::pi); }

  double value(const Point2& c, double t) const { return std::abs(odd_part(t) - 2.0 * c.dot(direction(t))); }

  double refine(const Point2& c, double lo, double hi) const
  {
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = hi - ratio * (hi - lo);
    double b = lo + ratio * (hi - lo);
    double fa = value(c, a);
    double fb = value(c, b);
    for (int it = 0; it < 60; ++it) {
      if (fa > fb) {
        hi = b;
        b = a;
        fb = fa;
        a = hi - ratio * (hi - lo);
        fa = value(c, a);
      } else {
        lo = a;
        a = b;
        fa = fb;
        b = lo + ratio * (hi - lo);
        fb = value(c, b);
      }
    }
    return std::max({fa, fb, value(c, lo), value(c, hi)});
  }

  const PlanarBody& body_;
  std::vector<double> odd_;
  double curvature_ = 0.0;
};

}  // namespace

PlanarBody::PlanarBody(double a0, std::vector<double> cos_terms, std::vector<double> sin_terms)
  : a0_(a0), cos_(std::move(cos_terms)), sin_(std::move(sin_terms))
{
  const std::size_t order = std::max(cos_.size(), sin_.size());
  cos_.resize(order, 0.0);
  sin_.resize(order, 0.0);
  for (std::size_t i = 0; i < kConvexityGrid; ++i) {
    const double theta = kTwoPi * static_cast<double>(i) / kConvexityGrid;
    if (!(curvature_radius(theta) > 0.0)) {
      throw GeometryError(ErrorCode::InvalidInput, "support series violates p + p'' > 0");
    }
  }
}

PlanarBody PlanarBody::disk(double radius)
{
  return PlanarBody(radius, {}, {});
}

double PlanarBody::support(double theta) const
{
  double p = a0_;
  for (std::size_t m = 1; m <= cos_.size(); ++m) {
    const double mt = static_cast<double>(m) * theta;
    p += cos_[m - 1] * std::cos(mt) + sin_[m - 1] * std::sin(mt);
  }
  return p;
}

double PlanarBody::curvature_radius(double theta) const
{
  double value = a0_;
  for (std::size_t m = 1; m <= cos_.size(); ++m) {
    const double mt = static_cast<double>(m) * theta;
    const double factor = 1.0 - static_cast<double>(m * m);
    value += factor * (cos_[m - 1] * std::cos(mt) + sin_[m - 1] * std::sin(mt));
  }
  return value;
}

Point2 PlanarBody::steiner_point() const
{
  if (cos_.empty()) {
    return Point2::Zero();
  }
  return {cos_[0], sin_[0]};
}

IsopticCurve isoptic_curve(const PlanarBody& body, double alpha, std::size_t count)
{
  if (!(alpha > 0.0) || !(alpha < std::numbers::pi)) {
    throw GeometryError(ErrorCode::InvalidAngle, "isoptic angle must lie in (0, pi)");
  }
  if (count < 16) {
    throw GeometryError(ErrorCode::InvalidInput, "isoptic needs at least 16 vertices");
  }
  const double det = std::sin(alpha);
  if (std::abs(det) < 1e-14) {
    throw GeometryError(ErrorCode::InvalidAngle, "support lines are parallel");
  }

  IsopticCurve curve;
  curve.alpha = alpha;
  curve.theta.reserve(count);
  curve.vertices.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double t1 = kTwoPi * static_cast<double>(j) / static_cast<double>(count);
    const double t2 = t1 + std::numbers::pi - alpha;
    const double p1 = body.support(t1);
    const double p2 = body.support(t2);
    // [cos t1, sin t1; cos t2, sin t2] z = [p1; p2], determinant sin(t2 - t1) = sin(alpha)
    const double c1 = std::cos(t1);
    const double s1 = std::sin(t1);
    const double c2 = std::cos(t2);
    const double s2 = std::sin(t2);
    const double d = c1 * s2 - s1 * c2;
    curve.theta.push_back(t1);
    curve.vertices.emplace_back((p1 * s2 - p2 * s1) / d, (c1 * p2 - c2 * p1) / d);
  }
  return curve;
}

double visual_angle(const PlanarBody& body, const Point2& z)
{
  auto gap = [&](double theta) { return body.support(theta) - direction(theta).dot(z); };

  std::size_t arg = 0;
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kScanGrid; ++i) {
    const double g = gap(kTwoPi * static_cast<double>(i) / kScanGrid);
    if (g < lowest) {
      lowest = g;
      arg = i;
    }
  }
  double center = kTwoPi * static_cast<double>(arg) / kScanGrid;
  if (!(lowest < 0.0)) {
    // The negative arc may fall between grid nodes; aim at it from the Steiner point.
    const Point2 offset = z - body.steiner_point();
    center = std::atan2(offset.y(), offset.x());
    if (!(gap(center) < 0.0)) {
      throw GeometryError(ErrorCode::ApexInsideBody, "point is not strictly outside the body");
    }
  }

  const double step = kTwoPi / kScanGrid;
  double left = center;
  while (gap(left - step) < 0.0) {
    left -= step;
    if (center - left > std::numbers::pi) {
      throw GeometryError(ErrorCode::GeometryInconsistent, "negative arc exceeds a half circle");
    }
  }
  double right = center;
  while (gap(right + step) < 0.0) {
    right += step;
    if (right - center > std::numbers::pi) {
      throw GeometryError(ErrorCode::GeometryInconsistent, "negative arc exceeds a half circle");
    }
  }
  const double lo = bisect_boundary(body, z, left, left - step);
  const double hi = bisect_boundary(body, z, right, right + step);
  return std::numbers::pi - (hi - lo);
}

Remark2Report remark2_report(const PlanarBody& body, double alpha, std::size_t count)
{
  Remark2Report report;
  const IsopticCurve curve = isoptic_curve(body, alpha, count);
  for (const Point2& z : curve.vertices) {
    report.angle_defect = std::max(report.angle_defect, std::abs(visual_angle(body, z) - alpha));
  }

  // The first harmonic is absorbed exactly by the Steiner point; the
  // minimax refinement can only lower the defect from there.
  const AsymmetryObjective asymmetry(body);
  const Point2 start = body.steiner_point();
  report.center = start;
  report.asymmetry_defect = asymmetry(start);

  auto objective = [&](const Eigen::VectorXd& c) {
    return asymmetry(Point2(c[0], c[1]));
  };
  const double scale = std::max(1e-3, 0.1 * std::abs(body.a0()));
  const SimplexResult refined =
      minimize_simplex(objective, Eigen::Vector2d(start), Eigen::Vector2d::Constant(scale), 400, 1e-12);
  if (refined.value < report.asymmetry_defect) {
    report.asymmetry_defect = refined.value;
    report.center = Point2(refined.argmin[0], refined.argmin[1]);
  }
  return report;
}

}  // namespace dcone
