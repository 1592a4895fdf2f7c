#pragma once

#include "dcone/types.hpp"

#include <cstddef>
#include <cstdint>

namespace dcone {

/// Deterministic low-discrepancy sample of the unit sphere in R^dim.
/// dim = 2: equally spaced circle; dim = 3: Fibonacci lattice;
/// dim >= 4: hyperspherical product grid thinned to `count` by stride.
PointList sphere_grid(int dim, std::size_t count);

/// Hyperspherical product grid on S^(dim-1) with `per_axis` nodes per angle,
/// per_axis^(dim-1) points in total. For dim = 2 this is the circle with
/// nodes at 2*pi*j/per_axis.
PointList product_sphere_grid(int dim, std::size_t per_axis);

/// The 2*dim signed coordinate axes followed by `sphere_grid(dim, count)`.
PointList default_directions(int dim, std::size_t count = 512);

/// Orthonormal basis of the complement of `axis` as the columns of a
/// dim x (dim-1) matrix. Odd in its argument: tangent_frame(-a) == -tangent_frame(a)
/// exactly, so meridians around antipodal poles correspond index by index.
Mat tangent_frame(const Vec& axis);

/// Rotation matrix drawn from `seed`; seed 0 gives the identity.
Mat seeded_rotation(int dim, std::uint64_t seed);

/// Representative of the projective class {v, -v} whose first nonzero
/// coordinate is positive.
Vec canonical_projective(const Vec& v);

/// Great-circle interpolation between unit vectors. Antipodal endpoints are
/// joined through the first column of tangent_frame(a).
Vec slerp(const Vec& a, const Vec& b, double t);

}  // namespace dcone
