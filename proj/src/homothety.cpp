#include "dcone/homothety.hpp"

#include "dcone/error.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace dcone {

namespace {

constexpr double kTranslationRatioTol = 1e-9;

}  // namespace

CorrespondedPair paired_graze(const ConvexBody& body, const Vec& x, const Vec& y, double tol,
                              int meridians)
{
  const Graze from_x = graze(body, x, meridians);
  const Graze from_y = graze(body, y, meridians);
  const double distance = cone_translation_distance(direction_set(from_x), direction_set(from_y));
  if (!(distance < tol)) {
    throw NotCongruentError(distance, tol);
  }

  CorrespondedPair pairs;
  pairs.x = x;
  pairs.y = y;
  pairs.cone_distance = distance;
  PointList opposite;
  PointList normals_y;
  opposite.reserve(from_x.contacts.size());
  normals_y.reserve(from_y.contacts.size());
  for (const Contact& c : from_x.contacts) {
    const Vec minus_u = -c.normal;
    pairs.normals.push_back(c.normal);
    pairs.k.push_back(c.point);
    pairs.l.push_back(body.support_gradient(minus_u));
    pairs.opposite_tangency =
        std::max(pairs.opposite_tangency, std::abs(body.support(minus_u) - minus_u.dot(y)));
    opposite.push_back(minus_u);
  }
  for (const Contact& c : from_y.contacts) {
    normals_y.push_back(c.normal);
  }
  pairs.normal_mismatch = angular_hausdorff(opposite, normals_y, false);
  if (!(pairs.normal_mismatch < tol)) {
    // Translate cones whose normal sets agree instead of being opposite
    // (the apex paired with itself) are not partners.
    throw NotCongruentError(pairs.normal_mismatch, tol);
  }
  return pairs;
}

double parallel_defect(const Vec& k1, const Vec& k2, const Vec& l1, const Vec& l2)
{
  const Vec a = k2 - k1;
  const Vec b = l2 - l1;
  const double na = a.norm();
  const double nb = b.norm();
  if (!(na > 0.0) || !(nb > 0.0)) {
    throw GeometryError(ErrorCode::DegenerateChord, "chord endpoints coincide");
  }
  const Vec ua = a / na;
  const Vec ub = b / nb;
  // Component of ua orthogonal to ub; avoids the cancellation in sqrt(1 - cos^2).
  const Vec perp = ua - ua.dot(ub) * ub;
  return std::min(1.0, perp.norm());
}

HomothetyFit homothety_fit(std::span<const Vec> from, std::span<const Vec> to)
{
  if (from.size() != to.size()) {
    throw GeometryError(ErrorCode::InvalidInput, "homothety fit needs equally many points");
  }
  if (from.size() < 3) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "homothety fit needs at least 3 pairs");
  }
  const auto n = from.front().size();
  const double m = static_cast<double>(from.size());
  Vec mean_from = Vec::Zero(n);
  Vec mean_to = Vec::Zero(n);
  for (std::size_t i = 0; i < from.size(); ++i) {
    mean_from += from[i];
    mean_to += to[i];
  }
  mean_from /= m;
  mean_to /= m;

  Eigen::MatrixXd centered(n, static_cast<Eigen::Index>(from.size()));
  double cross = 0.0;
  double spread = 0.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    const Vec dk = from[i] - mean_from;
    centered.col(static_cast<Eigen::Index>(i)) = dk;
    cross += dk.dot(to[i] - mean_to);
    spread += dk.squaredNorm();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
  const auto& sv = svd.singularValues();
  if (sv.size() < 2 || !(sv[1] > 1e-12 * std::max(1.0, sv[0]))) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "source points are collinear");
  }

  const double ratio = cross / spread;
  const Vec offset = mean_to - ratio * mean_from;
  if (std::abs(1.0 - ratio) < kTranslationRatioTol) {
    throw GeometryError(ErrorCode::TranslationNotHomothety,
                        "fitted ratio is 1, the point sets differ by a translation");
  }

  double sse = 0.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    sse += (to[i] - ratio * from[i] - offset).squaredNorm();
  }
  return HomothetyFit{ratio, offset / (1.0 - ratio), std::sqrt(sse / m)};
}

HomothetyFit homothety_fit(const CorrespondedPair& pairs)
{
  return homothety_fit(pairs.k, pairs.l);
}

UnitInverseCheck unit_inverse_check(const HomothetyFit& fit, const Vec& x, const Vec& y, double tol)
{
  return unit_inverse_check(fit, x, y, tol, tol);
}

UnitInverseCheck unit_inverse_check(const HomothetyFit& fit, const Vec& x, const Vec& y,
                                    double ratio_tol, double center_tol)
{
  const double defect = (fit.center - 0.5 * (x + y)).norm();
  return UnitInverseCheck{std::abs(fit.ratio + 1.0) < ratio_tol && defect < center_tol, defect};
}

}  // namespace dcone
