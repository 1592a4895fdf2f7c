#include "dcone/error.hpp"
#include "dcone/parallel.hpp"
#include "dcone/sampling.hpp"
#include "dcone/simplex.hpp"
#include "dcone/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dcone {

namespace {

constexpr int kRefineIterations = 200;
constexpr double kRefineSizeTol = 1e-10;
constexpr double kOffSidePenalty = std::numbers::pi;
constexpr int kSearchMeridians = 64;

/// Typical spacing of N roughly uniform points on S^(n-1).
double grid_spacing(int n, std::size_t count)
{
  const double half = 0.5 * n;
  const double area = 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
  return std::pow(area / static_cast<double>(count), 1.0 / (n - 1));
}

}  // namespace

void Scenario::validate() const
{
  if (body.dim() != surface.dim()) {
    throw GeometryError(ErrorCode::InvalidInput, "body and surface dimensions differ");
  }
  if (body.dim() < 3) {
    throw GeometryError(ErrorCode::InvalidInput, "the cone pipeline needs dimension n >= 3");
  }
  if (samples < 8) {
    throw GeometryError(ErrorCode::InvalidInput, "scenario needs N >= 8 surface samples");
  }
  if (meridians < 8) {
    throw GeometryError(ErrorCode::InvalidInput, "scenario needs M >= 8 meridians");
  }
  for (double tol : {tolerances.congruence, tolerances.ratio, tolerances.center, tolerances.symmetry}) {
    if (!(tol > 0.0)) {
      throw GeometryError(ErrorCode::InvalidInput, "tolerances must be positive");
    }
  }
  const PointList normals = default_directions(body.dim(), 2048);
  const double gap = containment_gap(body, surface, normals);
  if (!(gap > clearance)) {
    throw GeometryError(ErrorCode::InvalidInput,
                        "body is not contained in the surface with the required clearance");
  }
}

PartnerSearch::PartnerSearch(Scenario scenario)
  : scenario_(std::move(scenario)),
    search_meridians_(std::min(scenario_.meridians, kSearchMeridians)),
    grid_(scenario_.surface.sample(scenario_.samples, scenario_.seed))
{
  cones_.resize(grid_.size());
  parallel_for(grid_.size(), [&](std::size_t i) {
    try {
      cones_[i] = cone_at(grid_[i], search_meridians_);
    } catch (const GeometryError&) {
      cones_[i].reset();
    }
  });
}

DoubleCone PartnerSearch::cone_at(const Vec& apex, int meridians) const
{
  return direction_set(graze(scenario_.body, apex, meridians));
}

PartnerResult PartnerSearch::find(const Vec& x) const
{
  const ConvexBody& body = scenario_.body;
  const StarSurface& surface = scenario_.surface;
  const DoubleCone cone_x = cone_at(x, search_meridians_);
  const Vec reference = body.reference_point();
  const Vec side = x - reference;
  auto far_side = [&](const Vec& y) { return (y - reference).dot(side) < 0.0; };

  double best = std::numeric_limits<double>::infinity();
  std::optional<std::size_t> best_index;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (!cones_[i] || !far_side(grid_[i])) {
      continue;
    }
    const double d = cone_loop_distance(cone_x, *cones_[i], best);
    if (d < best) {
      best = d;
      best_index = i;
    }
  }
  if (!best_index) {
    throw GeometryError(ErrorCode::GeometryInconsistent, "no candidate partner on the far side of K");
  }

  const int n = surface.dim();
  const Vec origin = surface.direction_of(grid_[*best_index]);
  const Mat chart = tangent_frame(origin);
  auto point_of = [&](const Eigen::VectorXd& s) {
    const Vec omega = (origin + chart * Vec(s)).normalized();
    return surface.point_at(omega);
  };
  auto objective = [&](const Eigen::VectorXd& s) {
    const Vec y = point_of(s);
    if (!far_side(y)) {
      return kOffSidePenalty;
    }
    return cone_loop_distance(cone_x, cone_at(y, search_meridians_));
  };

  const double step = 0.5 * grid_spacing(n, grid_.size());
  const SimplexResult refined =
      minimize_simplex(objective, Eigen::VectorXd::Zero(n - 1), Eigen::VectorXd::Constant(n - 1, step),
                       kRefineIterations, kRefineSizeTol);

  // The coarse loop distance only steers the search; the reported distance
  // is the sampled one at the full meridian count.
  const int m = scenario_.meridians;
  const DoubleCone full_x = cone_at(x, m);
  const Vec y = refined.value <= best ? point_of(refined.argmin) : grid_[*best_index];
  return PartnerResult{y, cone_translation_distance(full_x, cone_at(y, m))};
}

PartnerResult find_partner(const Scenario& scenario, const Vec& x)
{
  return PartnerSearch(scenario).find(x);
}

}  // namespace dcone
