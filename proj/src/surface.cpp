#include "dcone/surface.hpp"

#include "dcone/error.hpp"
#include "dcone/sampling.hpp"

#include <cmath>
#include <limits>

namespace dcone {

namespace {

constexpr std::size_t kPositivityGrid = 4096;

}  // namespace

double Monomial::evaluate(const Vec& omega) const
{
  double value = coef;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    for (int e = 0; e < exponents[j]; ++e) {
      value *= omega[static_cast<Eigen::Index>(j)];
    }
  }
  return value;
}

StarSurface::StarSurface(Vec center, double radius, std::vector<Monomial> terms)
  : center_(std::move(center)), radius_(radius), terms_(std::move(terms))
{
}

StarSurface StarSurface::sphere(const Vec& center, double radius)
{
  return perturbed(center, radius, {});
}

StarSurface StarSurface::perturbed(const Vec& center, double radius, std::vector<Monomial> terms)
{
  const int dim = static_cast<int>(center.size());
  if (dim < 2 || dim > kMaxDim || !center.allFinite()) {
    throw GeometryError(ErrorCode::InvalidInput, "surface center has invalid dimension");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw GeometryError(ErrorCode::InvalidInput, "surface radius must be positive");
  }
  for (const auto& term : terms) {
    if (static_cast<int>(term.exponents.size()) != dim) {
      throw GeometryError(ErrorCode::InvalidInput, "perturbation exponents must have one entry per axis");
    }
    for (int e : term.exponents) {
      if (e < 0) {
        throw GeometryError(ErrorCode::InvalidInput, "perturbation exponents must be non-negative");
      }
    }
    if (!std::isfinite(term.coef)) {
      throw GeometryError(ErrorCode::InvalidInput, "perturbation coefficient must be finite");
    }
  }
  StarSurface surface(center, radius, std::move(terms));
  for (const Vec& omega : default_directions(dim, kPositivityGrid)) {
    if (!(surface.radius_at(omega) > 0.0)) {
      throw GeometryError(ErrorCode::InvalidInput, "radial function is not positive on the grid");
    }
  }
  return surface;
}

double StarSurface::radius_at(const Vec& omega) const
{
  double factor = 1.0;
  for (const auto& term : terms_) {
    factor += term.evaluate(omega);
  }
  return radius_ * factor;
}

Vec StarSurface::point_at(const Vec& omega) const
{
  return center_ + radius_at(omega) * omega;
}

Vec StarSurface::direction_of(const Vec& p) const
{
  const Vec d = p - center_;
  const double r = d.norm();
  if (!(r > 0.0)) {
    throw GeometryError(ErrorCode::InvalidInput, "point coincides with the surface center");
  }
  return d / r;
}

double StarSurface::radial_offset(const Vec& p) const
{
  const Vec d = p - center_;
  const double r = d.norm();
  if (!(r > 0.0)) {
    return -radius_at(unit_axis(dim(), 0));
  }
  return r - radius_at(d / r);
}

PointList StarSurface::sample(std::size_t count, std::uint64_t seed) const
{
  if (count < 2) {
    throw GeometryError(ErrorCode::InvalidInput, "surface sample needs at least two points");
  }
  const Mat rotation = seeded_rotation(dim(), seed);
  PointList points;
  points.reserve(count);
  for (const Vec& omega : sphere_grid(dim(), count)) {
    const Vec w = (rotation * omega).normalized();
    points.push_back(point_at(w));
  }
  return points;
}

SurfacePath::SurfacePath(StarSurface surface, const Vec& from, const Vec& to)
  : surface_(std::move(surface)), from_(from.normalized()), to_(to.normalized())
{
}

SurfacePath SurfacePath::between_points(const StarSurface& surface, const Vec& a, const Vec& b)
{
  return SurfacePath(surface, surface.direction_of(a), surface.direction_of(b));
}

Vec SurfacePath::direction(double t) const
{
  if (t <= 0.0) {
    return from_;
  }
  if (t >= 1.0) {
    return to_;
  }
  return slerp(from_, to_, t).normalized();
}

Vec SurfacePath::operator()(double t) const
{
  return surface_.point_at(direction(t));
}

double surface_symmetry_defect(const StarSurface& surface, const Vec& c,
                               std::span<const Vec> directions)
{
  if (c.size() != surface.dim()) {
    throw GeometryError(ErrorCode::InvalidInput, "center dimension mismatch");
  }
  double worst = 0.0;
  for (const Vec& omega : directions) {
    const Vec reflected = 2.0 * c - surface.point_at(omega);
    const Vec d = reflected - surface.center();
    const double r = d.norm();
    if (r < 1e-12 * surface.base_radius()) {
      throw GeometryError(ErrorCode::DegenerateReflection,
                          "reflected point coincides with the surface center");
    }
    worst = std::max(worst, std::abs(r - surface.radius_at(d / r)));
  }
  return worst;
}

double surface_symmetry_defect(const StarSurface& surface, const Vec& c)
{
  const PointList directions = default_directions(surface.dim(), 2048);
  return surface_symmetry_defect(surface, c, directions);
}

double containment_gap(const ConvexBody& body, const StarSurface& surface,
                       std::span<const Vec> normals)
{
  if (body.dim() != surface.dim()) {
    throw GeometryError(ErrorCode::InvalidInput, "body and surface dimensions differ");
  }
  double gap = std::numeric_limits<double>::infinity();
  for (const Vec& u : normals) {
    const Vec k = body.support_gradient(u);
    gap = std::min(gap, -surface.radial_offset(k));
  }
  return gap;
}

}  // namespace dcone
