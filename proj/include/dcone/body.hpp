#pragma once

#include "dcone/types.hpp"

#include <span>
#include <variant>
#include <vector>

namespace dcone {

enum class BodyKind { Ellipsoid, LpBall, MinkowskiSum };

/// Smooth strictly convex body described by its support function
/// h(u) = max over the body of <u, .> and the contact map u -> grad h(u).
///
/// Three families are available:
///   ellipsoid       {c0 + A^(1/2) w : |w| <= 1},  h(u) = sqrt(u'Au) + <c0,u>
///   lp_ball         {c0 + w : |w|_p <= r},       h(u) = r |u|_q + <c0,u>, 1/p + 1/q = 1
///   minkowski_sum   sum of summands plus a fixed offset, h = sum of h_i + <offset,u>
///
/// Values are immutable after construction; all queries are const and
/// thread-safe.
class ConvexBody
{
public:
  static ConvexBody ellipsoid(const Mat& shape, const Vec& center);
  static ConvexBody lp_ball(double p, double radius, const Vec& center);
  static ConvexBody minkowski_sum(std::vector<ConvexBody> summands, const Vec& offset);
  static ConvexBody minkowski_sum(std::vector<ConvexBody> summands);
  static ConvexBody unit_ball(int dim);

  int dim() const noexcept { return dim_; }
  BodyKind kind() const noexcept;

  /// Support function h(u). Positively homogeneous of degree one; `u` must
  /// be nonzero but need not be normalized.
  double support(const Vec& u) const;

  /// Contact point of the supporting hyperplane with outer normal `u`.
  Vec support_gradient(const Vec& u) const;

  /// h(u) and grad h(u) in one pass, for the inner loops.
  double support_and_gradient(const Vec& u, Vec& gradient) const;

  /// A point of the interior (the center of symmetry for every provided kind).
  Vec reference_point() const;

  // Parameter access for serialization.
  const Mat& shape() const;
  double exponent() const;
  double radius() const;
  const Vec& center() const;
  const std::vector<ConvexBody>& summands() const;

private:
  struct EllipsoidData
  {
    Mat shape;
    Vec center;
  };
  struct LpBallData
  {
    double p;
    double q;
    double radius;
    Vec center;
  };
  struct SumData
  {
    std::vector<ConvexBody> summands;
    Vec offset;
  };

  ConvexBody(int dim, std::variant<EllipsoidData, LpBallData, SumData> data);

  double evaluate(const Vec& u, Vec* gradient) const;

  int dim_;
  std::variant<EllipsoidData, LpBallData, SumData> data_;
};

/// The hyperplane {x : <normal, x> = offset} with unit normal.
struct Hyperplane
{
  Vec normal;
  double offset = 0.0;

  /// <normal, x> - offset; negative on the open half-space side.
  double evaluate(const Vec& x) const { return normal.dot(x) - offset; }
};

/// Supporting hyperplane Pi(u, h(u)) of the body with outer normal u/|u|.
Hyperplane supporting_hyperplane(const ConvexBody& body, const Vec& u);

/// max over samples of |h(u) - h(-u) - 2<c,u>|; zero iff the body is
/// centrally symmetric about c (on the sample).
double central_asymmetry(const ConvexBody& body, const Vec& c, std::span<const Vec> samples);

/// Least-squares center from h(u) - h(-u) = 2<c,u>.
Vec estimate_center(const ConvexBody& body, std::span<const Vec> samples);

}  // namespace dcone
