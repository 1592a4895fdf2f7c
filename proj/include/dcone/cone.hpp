#pragma once

#include "dcone/body.hpp"
#include "dcone/types.hpp"

#include <limits>
#include <vector>

namespace dcone {

/// Tangent hyperplane through the apex: outer unit normal and the point
/// where it touches the body.
struct Contact
{
  Vec normal;
  Vec point;
};

/// Shadow boundary of the body seen from `apex`, sampled along meridians of
/// the normal sphere. Contacts are stored in meridian (azimuth) order.
struct Graze
{
  Vec apex;
  std::vector<Contact> contacts;

  int dim() const noexcept { return static_cast<int>(apex.size()); }
};

/// Support double-cone: the apex and the generator directions, one
/// canonical representative per projective class {d, -d}.
struct DoubleCone
{
  Vec apex;
  PointList directions;
};

inline constexpr int kDefaultMeridians = 256;
inline constexpr double kGrazeGapTolerance = 1e-12;

/// g(u) = h(u) - <u, x>. Zero exactly on normals of tangent hyperplanes
/// through x, negative where the hyperplane separates x from the body.
/// Throws ApexInsideBody when x is not strictly outside.
double tangency_gap(const ConvexBody& body, const Vec& x, const Vec& u);

/// Some unit u with tangency_gap(u) < 0. Throws ApexInsideBody if none exists.
Vec separating_normal(const ConvexBody& body, const Vec& x);

/// Samples the graze from apex x. In R^3 there are `meridians` contacts; in
/// R^n the meridian directions form a product grid with meridians^(n-2)
/// nodes. In R^2 the two tangent lines are returned.
Graze graze(const ConvexBody& body, const Vec& x, int meridians = kDefaultMeridians);

/// Largest pairwise distance between contact points.
double graze_diameter(const Graze& graze);

DoubleCone direction_set(const Graze& graze);

/// Symmetric Hausdorff distance between the projective direction sets,
/// with d(u, v) = min(angle(u, v), angle(u, -v)), in radians.
double cone_translation_distance(const DoubleCone& a, const DoubleCone& b);

/// Same distance, but the scan may stop as soon as the result is known to
/// exceed `cap`; any returned value >= cap only certifies "at least cap".
double cone_translation_distance(const DoubleCone& a, const DoubleCone& b, double cap);

/// Hausdorff distance between the generator loops of two cones in R^3,
/// each loop read as the closed polyline of great arcs through consecutive
/// directions. Unlike the sampled distance it does not jump when the two
/// samplings slide along the loop, which makes it a usable search objective.
/// Falls back to the sampled distance outside R^3.
double cone_loop_distance(const DoubleCone& a, const DoubleCone& b,
                          double cap = std::numeric_limits<double>::infinity());

/// Hausdorff distance between two sets of unit vectors. `projective`
/// selects the double-cone metric; otherwise the plain angle is used.
double angular_hausdorff(const PointList& a, const PointList& b, bool projective,
                         double cap = std::numeric_limits<double>::infinity());

/// min(angle(a, b), angle(a, -b)) for unit vectors.
double projective_angle(const Vec& a, const Vec& b);

}  // namespace dcone
