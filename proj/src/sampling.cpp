#include "dcone/sampling.hpp"

#include "dcone/error.hpp"

#include <Eigen/LU>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace dcone {

namespace {

void require_dim(int dim)
{
  if (dim < 2 || dim > kMaxDim) {
    throw GeometryError(ErrorCode::InvalidInput,
                        "dimension must lie in [2, " + std::to_string(kMaxDim) + "]");
  }
}

}  // namespace

PointList product_sphere_grid(int dim, std::size_t per_axis)
{
  require_dim(dim);
  if (per_axis == 0) {
    throw GeometryError(ErrorCode::InvalidInput, "grid needs at least one node per axis");
  }
  const int angles = dim - 1;
  std::size_t total = 1;
  for (int i = 0; i < angles; ++i) {
    total *= per_axis;
  }

  PointList points;
  points.reserve(total);
  std::vector<std::size_t> index(static_cast<std::size_t>(angles), 0);
  const double k = static_cast<double>(per_axis);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (int a = angles - 1; a >= 0; --a) {
      index[static_cast<std::size_t>(a)] = rest % per_axis;
      rest /= per_axis;
    }
    Vec p(dim);
    double sin_product = 1.0;
    for (int a = 0; a < angles; ++a) {
      const double idx = static_cast<double>(index[static_cast<std::size_t>(a)]);
      // polar angles avoid the poles, the last (azimuthal) angle wraps
      const double phi = (a == angles - 1) ? 2.0 * std::numbers::pi * idx / k
                                           : std::numbers::pi * (idx + 0.5) / k;
      p[a] = sin_product * std::cos(phi);
      sin_product *= std::sin(phi);
    }
    p[dim - 1] = sin_product;
    points.push_back(p);
  }
  return points;
}

PointList sphere_grid(int dim, std::size_t count)
{
  require_dim(dim);
  if (count == 0) {
    throw GeometryError(ErrorCode::InvalidInput, "sample count must be positive");
  }
  PointList points;
  points.reserve(count);
  const double n = static_cast<double>(count);

  if (dim == 2) {
    for (std::size_t i = 0; i < count; ++i) {
      const double theta = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / n;
      points.push_back(vec({std::cos(theta), std::sin(theta)}));
    }
    return points;
  }

  if (dim == 3) {
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / n;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden_angle * static_cast<double>(i);
      points.push_back(vec({r * std::cos(phi), r * std::sin(phi), z}));
    }
    return points;
  }

  std::size_t per_axis = 1;
  auto grid_size = [dim](std::size_t k) {
    std::size_t total = 1;
    for (int i = 0; i < dim - 1; ++i) {
      total *= k;
    }
    return total;
  };
  while (grid_size(per_axis) < count) {
    ++per_axis;
  }
  const PointList full = product_sphere_grid(dim, per_axis);
  const double stride = static_cast<double>(full.size()) / n;
  for (std::size_t i = 0; i < count; ++i) {
    points.push_back(full[static_cast<std::size_t>(std::floor(static_cast<double>(i) * stride))]);
  }
  return points;
}

PointList default_directions(int dim, std::size_t count)
{
  PointList directions;
  directions.reserve(2 * static_cast<std::size_t>(dim) + count);
  for (int axis = 0; axis < dim; ++axis) {
    directions.push_back(unit_axis(dim, axis, 1.0));
    directions.push_back(unit_axis(dim, axis, -1.0));
  }
  const PointList grid = sphere_grid(dim, count);
  directions.insert(directions.end(), grid.begin(), grid.end());
  return directions;
}

Mat tangent_frame(const Vec& axis)
{
  const int dim = static_cast<int>(axis.size());
  require_dim(dim);
  const double norm = axis.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw GeometryError(ErrorCode::InvalidInput, "tangent frame of a zero vector");
  }

  // Build the frame for the canonical representative and flip it with the
  // sign, which makes the construction exactly odd.
  int lead = 0;
  while (lead < dim && axis[lead] == 0.0) {
    ++lead;
  }
  const double sign = axis[lead] > 0.0 ? 1.0 : -1.0;
  const Vec b = (sign / norm) * axis;

  std::vector<int> order(static_cast<std::size_t>(dim));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&b](int i, int j) { return std::abs(b[i]) < std::abs(b[j]); });

  Mat frame(dim, dim - 1);
  int accepted = 0;
  for (int candidate : order) {
    if (accepted == dim - 1) {
      break;
    }
    Vec v = unit_axis(dim, candidate);
    v -= v.dot(b) * b;
    for (int j = 0; j < accepted; ++j) {
      v -= v.dot(frame.col(j)) * frame.col(j);
    }
    const double r = v.norm();
    if (r > 1e-6) {
      frame.col(accepted++) = v / r;
    }
  }
  return sign * frame;
}

Mat seeded_rotation(int dim, std::uint64_t seed)
{
  require_dim(dim);
  if (seed == 0) {
    return Mat::Identity(dim, dim);
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      g(i, j) = normal(rng);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    if (r(j, j) < 0.0) {
      q.col(j) *= -1.0;
    }
  }
  if (q.determinant() < 0.0) {
    q.col(0) *= -1.0;
  }
  return q;
}

Vec canonical_projective(const Vec& v)
{
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0.0) {
      return v[i] > 0.0 ? v : Vec(-v);
    }
  }
  return v;
}

Vec slerp(const Vec& a, const Vec& b, double t)
{
  const double cosine = std::clamp(a.dot(b), -1.0, 1.0);
  Vec ortho = b - cosine * a;
  const double sine = ortho.norm();
  double angle = 0.0;
  if (sine < 1e-12) {
    if (cosine > 0.0) {
      return a;
    }
    ortho = tangent_frame(a).col(0);
    angle = std::numbers::pi;
  } else {
    ortho /= sine;
    angle = std::atan2(sine, cosine);
  }
  const double theta = t * angle;
  return std::cos(theta) * a + std::sin(theta) * ortho;
}

}  // namespace dcone
