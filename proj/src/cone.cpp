#include "dcone/cone.hpp"

#include "dcone/error.hpp"
#include "dcone/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <tuple>

namespace dcone {

namespace {

constexpr int kMaxRootIterations = 200;
constexpr int kMaxPoleIterations = 100;
constexpr double kAcceptGap = 1e-9;

double gap(const ConvexBody& body, const Vec& x, const Vec& u)
{
  return body.support(u) - u.dot(x);
}

/// Unit directions of the meridian planes, expressed in the ambient space.
PointList meridian_directions(const Mat& frame, int meridians)
{
  const int n = static_cast<int>(frame.rows());
  PointList directions;
  if (n == 2) {
    directions.push_back(frame.col(0));
    directions.push_back(-frame.col(0));
    return directions;
  }
  const PointList nodes = product_sphere_grid(n - 1, static_cast<std::size_t>(meridians));
  directions.reserve(nodes.size());
  for (const Vec& w : nodes) {
    directions.push_back(frame * w);
  }
  return directions;
}

struct MeridianRoot
{
  double phi;
  Vec normal;
  Vec contact;
  double residual;
};

/// Root of g(phi) = h(u(phi)) - <u(phi), x> on [0, pi] for
/// u(phi) = -cos(phi) pole + sin(phi) w, with g(0) > 0 > g(pi).
/// Newton steps on the bracketed interval, bisection whenever a step leaves it.
MeridianRoot meridian_root(const ConvexBody& body, const Vec& x, const Vec& pole, const Vec& w,
                           double phi_start, double tol)
{
  const int n = body.dim();
  Vec u(n);
  Vec du(n);
  Vec grad(n);
  double lo = 0.0;
  double hi = std::numbers::pi;
  double phi = std::clamp(phi_start, lo, hi);
  if (phi <= lo || phi >= hi) {
    phi = 0.5 * (lo + hi);
  }

  double best_abs = std::numeric_limits<double>::infinity();
  MeridianRoot best{phi, Vec(n), Vec(n), best_abs};
  for (int iter = 0; iter < kMaxRootIterations; ++iter) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    u = -c * pole + s * w;
    const double g = body.support_and_gradient(u, grad) - u.dot(x);
    if (std::abs(g) < best_abs) {
      best_abs = std::abs(g);
      best = MeridianRoot{phi, u, grad, best_abs};
    }
    if (std::abs(g) < tol) {
      break;
    }
    if (g > 0.0) {
      lo = phi;
    } else {
      hi = phi;
    }
    if (hi - lo < 4.0 * std::numeric_limits<double>::epsilon()) {
      break;
    }
    du = s * pole + c * w;
    const double slope = (grad - x).dot(du);
    double next = phi - g / slope;
    if (!std::isfinite(next) || next <= lo || next >= hi) {
      next = 0.5 * (lo + hi);
    }
    phi = next;
  }
  return best;
}

/// Squared chord between unit vectors, optionally projective.
inline double chord2(const double* a, const double* b, int n, bool projective)
{
  double minus = 0.0;
  double plus = 0.0;
  for (int i = 0; i < n; ++i) {
    const double dm = a[i] - b[i];
    minus += dm * dm;
    if (projective) {
      const double dp = a[i] + b[i];
      plus += dp * dp;
    }
  }
  return projective ? std::min(minus, plus) : minus;
}

double chord2_to_angle(double c2)
{
  return 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(c2)));
}

/// Directed Hausdorff (early-break scan, warm-started at the previous
/// nearest index), in squared-chord units. Stops once the value exceeds cap2.
double directed_hausdorff(const PointList& a, const PointList& b, bool projective, double cap2)
{
  const std::size_t nb = b.size();
  double cmax = 0.0;
  std::size_t guess = 0;
  for (const Vec& p : a) {
    const int n = static_cast<int>(p.size());
    double cmin = std::numeric_limits<double>::infinity();
    std::size_t arg = guess;
    bool dominated = false;
    for (std::size_t k = 0; k < nb; ++k) {
      const std::size_t j = (guess + k) % nb;
      const double d = chord2(p.data(), b[j].data(), n, projective);
      if (d < cmin) {
        cmin = d;
        arg = j;
      }
      if (d < cmax) {
        dominated = true;
        break;
      }
    }
    guess = arg;
    if (!dominated && cmin > cmax) {
      cmax = cmin;
      if (cmax > cap2) {
        return cmax;
      }
    }
  }
  return cmax;
}

/// Great arc from e1 towards b1; `cos_span`, `sin_span` fix its length.
struct Arc
{
  Eigen::Vector3d e1;
  Eigen::Vector3d e2;
  double cos_span;
  double sin_span;
};

std::vector<Arc> loop_arcs(const PointList& loop)
{
  std::vector<Arc> arcs;
  arcs.reserve(loop.size());
  for (std::size_t j = 0; j < loop.size(); ++j) {
    const Eigen::Vector3d b0 = loop[j].head<3>();
    Eigen::Vector3d b1 = loop[(j + 1) % loop.size()].head<3>();
    if (b1.dot(b0) < 0.0) {
      b1 = -b1;  // projective representatives may flip between neighbours
    }
    const double c = b1.dot(b0);
    Eigen::Vector3d e2 = b1 - c * b0;
    const double s = e2.norm();
    if (s > 0.0) {
      e2 /= s;
    }
    arcs.push_back(Arc{b0, e2, c, s});
  }
  return arcs;
}

/// Squared chord from +-v to the arc.
double arc_chord2(const Eigen::Vector3d& p, const Arc& arc)
{
  double best = std::numeric_limits<double>::infinity();
  for (const double sign : {1.0, -1.0}) {
    const Eigen::Vector3d v = sign * p;
    const double x = v.dot(arc.e1);
    const double y = v.dot(arc.e2);
    if (arc.sin_span > 0.0 && y >= 0.0 && x * arc.sin_span - y * arc.cos_span >= 0.0) {
      // Foot of the perpendicular lies on the arc: chord^2 = 2 (1 - r), r = |(x, y)|.
      const double perp2 = (v - x * arc.e1 - y * arc.e2).squaredNorm();
      const double r = std::sqrt(std::max(0.0, x * x + y * y));
      best = std::min(best, 2.0 * perp2 / (1.0 + r));
    } else {
      const Eigen::Vector3d end = arc.cos_span * arc.e1 + arc.sin_span * arc.e2;
      best = std::min({best, (v - arc.e1).squaredNorm(), (v - end).squaredNorm()});
    }
  }
  return best;
}

/// Both loops are ordered, so the nearest arc of a[i] is usually found by a
/// short walk from that of a[i - 1]. The walk gives an upper bound for every
/// point; only points whose bound could raise the running maximum get the
/// exact full scan, visited in decreasing order of their bounds.
double directed_loop_hausdorff(const PointList& a, const std::vector<Arc>& arcs, double cap2)
{
  constexpr std::size_t kPatience = 3;
  const std::size_t nb = arcs.size();
  std::vector<double> bound(a.size());
  std::size_t guess = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Eigen::Vector3d p = a[i].head<3>();
    std::size_t best_j = guess;
    double best = arc_chord2(p, arcs[guess]);
    for (const std::size_t step : {std::size_t{1}, nb - 1}) {
      std::size_t j = best_j;
      std::size_t idle = 0;
      for (std::size_t k = 1; k < nb && idle < kPatience; ++k) {
        j = (j + step) % nb;
        const double d = arc_chord2(p, arcs[j]);
        if (d < best) {
          best = d;
          best_j = j;
          idle = 0;
        } else {
          ++idle;
        }
      }
    }
    bound[i] = best;
    guess = best_j;
  }

  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return bound[l] > bound[r]; });
  double cmax = 0.0;
  for (const std::size_t i : order) {
    if (bound[i] <= cmax) {
      break;
    }
    const Eigen::Vector3d p = a[i].head<3>();
    double cmin = bound[i];
    for (std::size_t j = 0; j < nb && cmin > cmax; ++j) {
      cmin = std::min(cmin, arc_chord2(p, arcs[j]));
    }
    cmax = std::max(cmax, cmin);
    if (cmax > cap2) {
      return cmax;
    }
  }
  return cmax;
}

double cap_chord2(double cap)
{
  if (!std::isfinite(cap)) {
    return std::numeric_limits<double>::infinity();
  }
  const double half = std::clamp(0.5 * cap, 0.0, 0.5 * std::numbers::pi);
  return 4.0 * std::sin(half) * std::sin(half);
}

}  // namespace

Vec separating_normal(const ConvexBody& body, const Vec& x)
{
  const int n = body.dim();
  if (x.size() != n || !x.allFinite()) {
    throw GeometryError(ErrorCode::InvalidInput, "apex dimension mismatch");
  }
  const Vec offset = x - body.reference_point();
  if (!(offset.norm() > 0.0)) {
    throw GeometryError(ErrorCode::ApexInsideBody, "apex coincides with an interior point");
  }
  Vec u = offset.normalized();
  if (gap(body, x, u) < 0.0) {
    return u;
  }

  // Damped iteration towards the fixed point u = (x - k(u)) / |x - k(u)|,
  // which is the outer normal at the point of the body nearest to x.
  Vec k(n);
  for (int iter = 0; iter < kMaxPoleIterations; ++iter) {
    body.support_and_gradient(u, k);
    const Vec toward = x - k;
    const double len = toward.norm();
    if (!(len > 0.0)) {
      break;
    }
    const Vec next = toward / len;
    if (gap(body, x, next) < 0.0) {
      return next;
    }
    const Vec mid = u + next;
    u = mid.norm() > 1e-12 ? Vec(mid.normalized()) : next;
    if (gap(body, x, u) < 0.0) {
      return u;
    }
  }

  double best = std::numeric_limits<double>::infinity();
  Vec best_u = u;
  for (const Vec& candidate : default_directions(n, 4096)) {
    const double g = gap(body, x, candidate);
    if (g < best) {
      best = g;
      best_u = candidate;
    }
  }
  if (best < 0.0) {
    return best_u;
  }
  throw GeometryError(ErrorCode::ApexInsideBody, "no hyperplane separates the apex from the body");
}

double tangency_gap(const ConvexBody& body, const Vec& x, const Vec& u)
{
  separating_normal(body, x);
  return gap(body, x, u);
}

Graze graze(const ConvexBody& body, const Vec& x, int meridians)
{
  if (meridians < 8) {
    throw GeometryError(ErrorCode::InvalidInput, "graze needs at least 8 meridians");
  }
  const Vec pole = separating_normal(body, x);
  if (!(gap(body, x, -pole) > 0.0)) {
    throw GeometryError(ErrorCode::GeometryInconsistent, "no sign bracket on the normal sphere");
  }
  const Mat frame = tangent_frame(pole);
  const PointList directions = meridian_directions(frame, meridians);

  Graze result{x, {}};
  result.contacts.reserve(directions.size());
  double phi = 0.5 * std::numbers::pi;
  for (const Vec& w : directions) {
    const MeridianRoot root = meridian_root(body, x, pole, w, phi, kGrazeGapTolerance);
    if (!(root.residual < kAcceptGap)) {
      throw GeometryError(ErrorCode::GeometryInconsistent,
                          "meridian root finding did not reach the tangency tolerance");
    }
    phi = root.phi;
    result.contacts.push_back(Contact{root.normal, root.contact});
  }
  return result;
}

namespace {

constexpr int kStencil = 3;

// Degree-6 interpolant through the loop samples i-3..i+3, evaluated at i+s.
Vec loop_at(const std::vector<Contact>& loop, std::ptrdiff_t i, double s)
{
  const auto m = static_cast<std::ptrdiff_t>(loop.size());
  Vec p = Vec::Zero(loop.front().point.size());
  for (int a = -kStencil; a <= kStencil; ++a) {
    double w = 1.0;
    for (int b = -kStencil; b <= kStencil; ++b) {
      if (b != a) {
        w *= (s - b) / (a - b);
      }
    }
    p += w * loop[static_cast<std::size_t>(((i + a) % m + m) % m)].point;
  }
  return p;
}

template <class F>
double golden_max(F f, double lo, double hi)
{
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = hi - r * (hi - lo);
  double b = lo + r * (hi - lo);
  double fa = f(a);
  double fb = f(b);
  for (int it = 0; it < 40; ++it) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + r * (hi - lo);
      fb = f(b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - r * (hi - lo);
      fa = f(a);
    }
  }
  return fa < fb ? b : a;
}

}  // namespace

double graze_diameter(const Graze& graze)
{
  const std::vector<Contact>& loop = graze.contacts;
  if (loop.size() < 2) {
    throw GeometryError(ErrorCode::InvalidInput, "diameter needs at least two contacts");
  }
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  double best = 0.0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    for (std::size_t j = i + 1; j < loop.size(); ++j) {
      const double d2 = (loop[i].point - loop[j].point).squaredNorm();
      best = std::max(best, d2);
      pairs.emplace_back(d2, i, j);
    }
  }
  // Only a 3-d graze is a closed loop in azimuth; there the sampled maximum
  // is off by O(h^2) and is polished on a local interpolant.
  if (graze.dim() != 3 || loop.size() < 16) {
    return std::sqrt(best);
  }
  const double h = 2.0 * std::numbers::pi / static_cast<double>(loop.size());
  const double floor = best * (1.0 - 4.0 * h * h);
  std::erase_if(pairs, [&](const auto& p) { return std::get<0>(p) < floor; });
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });
  if (pairs.size() > 256) {
    pairs.resize(256);
  }
  for (const auto& [d2, i, j] : pairs) {
    const auto pi = static_cast<std::ptrdiff_t>(i);
    const auto pj = static_cast<std::ptrdiff_t>(j);
    double s = 0.0;
    double t = 0.0;
    for (int round = 0; round < 4; ++round) {
      const Vec q = loop_at(loop, pj, t);
      s = golden_max([&](double v) { return (loop_at(loop, pi, v) - q).squaredNorm(); }, -1.0, 1.0);
      const Vec p = loop_at(loop, pi, s);
      t = golden_max([&](double v) { return (p - loop_at(loop, pj, v)).squaredNorm(); }, -1.0, 1.0);
    }
    best = std::max(best, (loop_at(loop, pi, s) - loop_at(loop, pj, t)).squaredNorm());
  }
  return std::sqrt(best);
}

DoubleCone direction_set(const Graze& graze)
{
  DoubleCone cone{graze.apex, {}};
  cone.directions.reserve(graze.contacts.size());
  for (const Contact& c : graze.contacts) {
    const Vec d = c.point - graze.apex;
    const double len = d.norm();
    if (!(len > 0.0)) {
      throw GeometryError(ErrorCode::GeometryInconsistent, "contact point coincides with the apex");
    }
    cone.directions.push_back(canonical_projective(d / len));
  }
  return cone;
}

double angular_hausdorff(const PointList& a, const PointList& b, bool projective, double cap)
{
  if (a.empty() || b.empty()) {
    throw GeometryError(ErrorCode::InvalidInput, "Hausdorff distance of an empty direction set");
  }
  if (a.front().size() != b.front().size()) {
    throw GeometryError(ErrorCode::InvalidInput, "direction sets differ in dimension");
  }
  const double cap2 = cap_chord2(cap);
  const double forward = directed_hausdorff(a, b, projective, cap2);
  if (forward > cap2) {
    return chord2_to_angle(forward);
  }
  const double backward = directed_hausdorff(b, a, projective, cap2);
  return chord2_to_angle(std::max(forward, backward));
}

double cone_translation_distance(const DoubleCone& a, const DoubleCone& b)
{
  return angular_hausdorff(a.directions, b.directions, true);
}

double cone_translation_distance(const DoubleCone& a, const DoubleCone& b, double cap)
{
  return angular_hausdorff(a.directions, b.directions, true, cap);
}

double cone_loop_distance(const DoubleCone& a, const DoubleCone& b, double cap)
{
  if (a.directions.size() < 3 || b.directions.size() < 3 || a.apex.size() != 3 || b.apex.size() != 3) {
    return angular_hausdorff(a.directions, b.directions, true, cap);
  }
  const double cap2 = cap_chord2(cap);
  const double forward = directed_loop_hausdorff(a.directions, loop_arcs(b.directions), cap2);
  if (forward > cap2) {
    return chord2_to_angle(forward);
  }
  const double backward = directed_loop_hausdorff(b.directions, loop_arcs(a.directions), cap2);
  return chord2_to_angle(std::max(forward, backward));
}

double projective_angle(const Vec& a, const Vec& b)
{
  return chord2_to_angle(chord2(a.data(), b.data(), static_cast<int>(a.size()), true));
}

}  // namespace dcone
