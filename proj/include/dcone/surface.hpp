#pragma once

#include "dcone/body.hpp"
#include "dcone/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dcone {

/// One perturbation term coef * prod_j omega_j^exponents[j] of the radial
/// function. Bounded by |coef| on the unit sphere.
struct Monomial
{
  double coef = 0.0;
  std::vector<int> exponents;

  double evaluate(const Vec& omega) const;
};

/// Star-shaped closed hypersurface {z0 + rho(w) w : |w| = 1} with
/// rho(w) = R (1 + sum_i coef_i m_i(w)).
class StarSurface
{
public:
  static StarSurface sphere(const Vec& center, double radius);
  static StarSurface perturbed(const Vec& center, double radius, std::vector<Monomial> terms);

  int dim() const noexcept { return static_cast<int>(center_.size()); }
  const Vec& center() const noexcept { return center_; }
  double base_radius() const noexcept { return radius_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_sphere() const noexcept { return terms_.empty(); }

  double radius_at(const Vec& omega) const;
  Vec point_at(const Vec& omega) const;

  /// Unit direction from the center to `p`.
  Vec direction_of(const Vec& p) const;

  /// Signed radial offset |p - z0| - rho(direction); negative strictly inside.
  double radial_offset(const Vec& p) const;

  /// `count` points on the surface from a deterministic spherical grid,
  /// rotated by `seeded_rotation(dim, seed)`.
  PointList sample(std::size_t count, std::uint64_t seed = 0) const;

private:
  StarSurface(Vec center, double radius, std::vector<Monomial> terms);

  Vec center_;
  double radius_;
  std::vector<Monomial> terms_;
};

/// Great-circle path in the radial parametrization between two directions.
class SurfacePath
{
public:
  SurfacePath(StarSurface surface, const Vec& from, const Vec& to);

  /// Builds the path between two surface points.
  static SurfacePath between_points(const StarSurface& surface, const Vec& a, const Vec& b);

  Vec direction(double t) const;
  Vec operator()(double t) const;

private:
  StarSurface surface_;
  Vec from_;
  Vec to_;
};

/// max over directions of the radial distance from 2c - point_at(w) to L.
double surface_symmetry_defect(const StarSurface& surface, const Vec& c,
                               std::span<const Vec> directions);
double surface_symmetry_defect(const StarSurface& surface, const Vec& c);

/// min over sampled normals u of rho(w) - |k(u) - z0| for the contact points
/// k(u) of the body; positive iff bd K (hence K) lies strictly inside L.
double containment_gap(const ConvexBody& body, const StarSurface& surface,
                       std::span<const Vec> normals);

}  // namespace dcone
