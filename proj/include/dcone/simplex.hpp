#pragma once

#include <Eigen/Core>

#include <functional>

namespace dcone {

struct SimplexResult
{
  Eigen::VectorXd argmin;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free Nelder-Mead minimization (GSL nmsimplex2). Stops when the
/// simplex characteristic size drops below `size_tol` or after `max_iter`
/// iterations. Objective exceptions are mapped to a large penalty value.
SimplexResult minimize_simplex(const std::function<double(const Eigen::VectorXd&)>& objective,
                               const Eigen::VectorXd& start, const Eigen::VectorXd& step,
                               int max_iter, double size_tol);

}  // namespace dcone
