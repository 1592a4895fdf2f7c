#include "dcone/simplex.hpp"

#include "dcone/error.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <cmath>
#include <memory>
#include <mutex>

namespace dcone {

namespace {

constexpr double kPenalty = 1e6;

struct Callback
{
  const std::function<double(const Eigen::VectorXd&)>* objective;
  Eigen::VectorXd scratch;
};

double trampoline(const gsl_vector* v, void* params)
{
  auto* cb = static_cast<Callback*>(params);
  for (Eigen::Index i = 0; i < cb->scratch.size(); ++i) {
    cb->scratch[i] = gsl_vector_get(v, static_cast<std::size_t>(i));
  }
  try {
    const double value = (*cb->objective)(cb->scratch);
    return std::isfinite(value) ? value : kPenalty;
  } catch (const GeometryError&) {
    return kPenalty;
  }
}

void disable_gsl_abort()
{
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
}

struct VectorDeleter
{
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};

struct MinimizerDeleter
{
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

std::unique_ptr<gsl_vector, VectorDeleter> to_gsl(const Eigen::VectorXd& v)
{
  std::unique_ptr<gsl_vector, VectorDeleter> out(gsl_vector_alloc(static_cast<std::size_t>(v.size())));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    gsl_vector_set(out.get(), static_cast<std::size_t>(i), v[i]);
  }
  return out;
}

}  // namespace

SimplexResult minimize_simplex(const std::function<double(const Eigen::VectorXd&)>& objective,
                               const Eigen::VectorXd& start, const Eigen::VectorXd& step,
                               int max_iter, double size_tol)
{
  disable_gsl_abort();
  const auto n = static_cast<std::size_t>(start.size());
  if (n == 0 || step.size() != start.size()) {
    throw GeometryError(ErrorCode::InvalidInput, "simplex start and step sizes differ");
  }

  Callback cb{&objective, Eigen::VectorXd(start.size())};
  gsl_multimin_function fn{&trampoline, n, &cb};
  auto x0 = to_gsl(start);
  auto ss = to_gsl(step);
  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> minimizer(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  gsl_multimin_fminimizer_set(minimizer.get(), &fn, x0.get(), ss.get());

  SimplexResult result;
  int status = GSL_CONTINUE;
  int iter = 0;
  while (status == GSL_CONTINUE && iter < max_iter) {
    ++iter;
    if (gsl_multimin_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) {
      break;
    }
    status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(minimizer.get()), size_tol);
  }

  result.argmin.resize(start.size());
  const gsl_vector* best = gsl_multimin_fminimizer_x(minimizer.get());
  for (std::size_t i = 0; i < n; ++i) {
    result.argmin[static_cast<Eigen::Index>(i)] = gsl_vector_get(best, i);
  }
  result.value = gsl_multimin_fminimizer_minimum(minimizer.get());
  result.iterations = iter;
  result.converged = status == GSL_SUCCESS;
  return result;
}

}  // namespace dcone
