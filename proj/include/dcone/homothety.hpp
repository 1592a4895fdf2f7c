#pragma once

#include "dcone/body.hpp"
#include "dcone/cone.hpp"
#include "dcone/types.hpp"

#include <span>

namespace dcone {

/// Contact points of parallel support hyperplanes through two apexes:
/// k[i] touches the tangent hyperplane through x with normal normals[i],
/// l[i] touches the parallel one through y with normal -normals[i].
struct CorrespondedPair
{
  Vec x;
  Vec y;
  PointList normals;
  PointList k;
  PointList l;
  double cone_distance = 0.0;
  /// Hausdorff angle between {-u : u in U_x} and the normal set U_y.
  double normal_mismatch = 0.0;
  /// max |h(-u) - <-u, y>| over the pairs.
  double opposite_tangency = 0.0;
};

/// z -> center + ratio (z - center); ratio < 0 is an inverse homothety.
struct HomothetyFit
{
  double ratio = 0.0;
  Vec center;
  double residual = 0.0;  ///< root-mean-square of |l - H(k)|

  Vec apply(const Vec& z) const { return center + ratio * (z - center); }
};

struct UnitInverseCheck
{
  bool pass = false;
  double center_defect = 0.0;
};

/// Pairs the grazes from x and y through opposite normals. Requires the two
/// support double-cones to be translates (cone distance < tol) and the
/// normal sets to satisfy U_y = -U_x within tol; throws NotCongruentError
/// otherwise.
CorrespondedPair paired_graze(const ConvexBody& body, const Vec& x, const Vec& y, double tol,
                              int meridians = kDefaultMeridians);

/// Sine of the angle between the lines of the chords k1k2 and l1l2, in [0, 1].
double parallel_defect(const Vec& k1, const Vec& k2, const Vec& l1, const Vec& l2);

/// Least-squares homothety mapping from[i] onto to[i], solved in the linear
/// form to = ratio * from + b with center = b / (1 - ratio).
HomothetyFit homothety_fit(std::span<const Vec> from, std::span<const Vec> to);
HomothetyFit homothety_fit(const CorrespondedPair& pairs);

/// Ratio -1 about the midpoint of [x, y].
UnitInverseCheck unit_inverse_check(const HomothetyFit& fit, const Vec& x, const Vec& y, double tol);
UnitInverseCheck unit_inverse_check(const HomothetyFit& fit, const Vec& x, const Vec& y,
                                    double ratio_tol, double center_tol);

}  // namespace dcone
