#pragma once

#include <Eigen/Core>

#include <vector>

namespace dcone {

/// Largest ambient dimension supported. Vectors keep their storage inline so
/// the hot loops (meridian root finding, Hausdorff scans) never allocate.
inline constexpr int kMaxDim = 8;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;
using PointList = std::vector<Vec>;

/// Builds a vector from a brace list, e.g. `vec({1.0, 0.0, 0.0})`.
inline Vec vec(std::initializer_list<double> values)
{
  Vec v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double value : values) {
    v[i++] = value;
  }
  return v;
}

inline Vec unit_axis(int dim, int axis, double sign = 1.0)
{
  Vec e = Vec::Zero(dim);
  e[axis] = sign;
  return e;
}

}  // namespace dcone
