#include "dcone/error.hpp"
#include "dcone/sampling.hpp"
#include "dcone/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dcone {

namespace {

constexpr int kMarchSteps = 1024;
constexpr int kBisections = 80;
constexpr int kCentroidPasses = 30;

/// First crossing of L along origin + s * dir, s > 0.
Vec ray_hit(const StarSurface& surface, const Vec& origin, const Vec& dir, double reach)
{
  const double step = reach / kMarchSteps;
  double lo = 0.0;
  double hi = 0.0;
  bool bracketed = false;
  for (int i = 1; i <= kMarchSteps; ++i) {
    hi = step * i;
    if (surface.radial_offset(origin + hi * dir) >= 0.0) {
      bracketed = true;
      break;
    }
    lo = hi;
  }
  if (!bracketed) {
    throw GeometryError(ErrorCode::GeometryInconsistent, "section ray never leaves the surface");
  }
  for (int i = 0; i < kBisections && hi - lo > 1e-15 * reach; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (surface.radial_offset(origin + mid * dir) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return origin + (0.5 * (lo + hi)) * dir;
}

PointList trace_loop(const StarSurface& surface, const Vec& origin, const Vec& e1, const Vec& e2,
                     int count, double angle_offset, double reach)
{
  PointList loop;
  loop.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / count + angle_offset;
    const Vec dir = std::cos(theta) * e1 + std::sin(theta) * e2;
    loop.push_back(ray_hit(surface, origin, dir, reach));
  }
  return loop;
}

Vec vertex_mean(const PointList& loop)
{
  Vec mean = Vec::Zero(loop.front().size());
  for (const Vec& p : loop) {
    mean += p;
  }
  return mean / static_cast<double>(loop.size());
}

/// Fixed point of "trace the section by rays from c, move c to the vertex
/// mean". Homotheties map fixed points to fixed points, so loops traced
/// from them correspond ray by ray.
Vec section_center(const StarSurface& surface, Vec origin, const Vec& e1, const Vec& e2, int count,
                   double reach)
{
  for (int pass = 0; pass < kCentroidPasses; ++pass) {
    const Vec next = vertex_mean(trace_loop(surface, origin, e1, e2, count, 0.0, reach));
    const double moved = (next - origin).norm();
    origin = next;
    if (moved < 1e-13 * reach) {
      break;
    }
  }
  return origin;
}

}  // namespace

double distance_to_segment(const Vec& p, const Vec& a, const Vec& b)
{
  const Vec ab = b - a;
  const double len2 = ab.squaredNorm();
  if (!(len2 > 0.0)) {
    return (p - a).norm();
  }
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

std::vector<SectionRecord> conjecture1_scan(const Scenario& scenario, std::span<const Vec> directions,
                                            int loop_points)
{
  scenario.validate();
  if (scenario.body.dim() != 3) {
    throw GeometryError(ErrorCode::InvalidInput, "section scan traces closed loops and needs n = 3");
  }
  if (loop_points < 8) {
    throw GeometryError(ErrorCode::InvalidInput, "section loops need at least 8 points");
  }
  const ConvexBody& body = scenario.body;
  const StarSurface& surface = scenario.surface;
  // The region bounded by L sits in the ball about z0 of radius R (1 + sum |coef|).
  double bound = 1.0;
  for (const auto& term : surface.terms()) {
    bound += std::abs(term.coef);
  }
  const double reach = 2.02 * surface.base_radius() * bound;

  std::vector<SectionRecord> records;
  records.reserve(directions.size());
  for (const Vec& raw : directions) {
    SectionRecord record;
    record.direction = raw.normalized();
    const Vec& u = record.direction;
    try {
      record.k_plus = body.support_gradient(u);
      record.k_minus = body.support_gradient(-u);
      if (surface.radial_offset(record.k_plus) >= 0.0 || surface.radial_offset(record.k_minus) >= 0.0) {
        throw GeometryError(ErrorCode::GeometryInconsistent, "support hyperplane misses the surface interior");
      }
      // Both planes share the in-plane basis of u.
      const Mat frame = tangent_frame(u);
      const Vec e1 = frame.col(0);
      const Vec e2 = frame.col(1);
      const Vec c_plus = section_center(surface, record.k_plus, e1, e2, loop_points, reach);
      const Vec c_minus = section_center(surface, record.k_minus, e1, e2, loop_points, reach);
      record.loop_plus = trace_loop(surface, c_plus, e1, e2, loop_points, 0.0, reach);
      // An inverse homothety sends the ray at angle theta to the one at theta + pi.
      record.loop_minus = trace_loop(surface, c_minus, e1, e2, loop_points, std::numbers::pi, reach);
      const HomothetyFit fit = homothety_fit(record.loop_plus, record.loop_minus);
      record.chord_defect = distance_to_segment(fit.center, record.k_plus, record.k_minus);
      record.fit = fit;
    } catch (const GeometryError& e) {
      record.error = e.what();
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace dcone
