#include "dcone/error.hpp"
#include "dcone/verifier.hpp"

#include <cmath>

namespace dcone {

std::string to_string(PathOutcome outcome)
{
  switch (outcome) {
    case PathOutcome::Root: return "root";
    case PathOutcome::Degenerate: return "degenerate";
    case PathOutcome::NoRoot: return "no-root";
  }
  return "unknown";
}

double PathRecord::identity_defect() const
{
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    worst = std::max(worst, std::abs(d[i] - (1.0 - r[i]) * diam_beta[i]));
  }
  return worst;
}

RootResult bisect_sign_change(const std::function<double(double)>& f, double lo, double hi,
                              double f_lo, double f_hi, double tol, int max_iter)
{
  if (std::abs(f_lo) < tol) {
    return RootResult{lo, f_lo, 0, true};
  }
  if (std::abs(f_hi) < tol) {
    return RootResult{hi, f_hi, 0, true};
  }
  if (f_lo * f_hi > 0.0) {
    throw GeometryError(ErrorCode::InvalidInput, "bisection needs a sign change on the bracket");
  }
  RootResult best{lo, f_lo, 0, false};
  if (std::abs(f_hi) < std::abs(f_lo)) {
    best = RootResult{hi, f_hi, 0, false};
  }
  for (int iter = 1; iter <= max_iter; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (std::abs(f_mid) <= std::abs(best.value)) {
      best = RootResult{mid, f_mid, iter, false};
    }
    best.iterations = iter;
    if (std::abs(f_mid) < tol) {
      best.converged = true;
      return best;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return best;
}

PathRecord path_record(const std::function<DiameterPair(double)>& diameters, int grid_points,
                       double root_tol, int max_iter)
{
  if (grid_points < 2) {
    throw GeometryError(ErrorCode::InvalidInput, "path grid needs at least two points");
  }
  PathRecord record;
  for (int i = 0; i < grid_points; ++i) {
    const double t = static_cast<double>(i) / (grid_points - 1);
    const auto [alpha, beta] = diameters(t);
    if (!(beta > 0.0)) {
      throw GeometryError(ErrorCode::GeometryInconsistent, "graze diameter vanished along the path");
    }
    record.t.push_back(t);
    record.diam_alpha.push_back(alpha);
    record.diam_beta.push_back(beta);
    record.d.push_back(beta - alpha);
    record.r.push_back(alpha / beta);
  }

  bool degenerate = true;
  for (double value : record.d) {
    degenerate = degenerate && std::abs(value) < root_tol;
  }
  if (degenerate) {
    const std::size_t mid = record.t.size() / 2;
    record.outcome = PathOutcome::Degenerate;
    record.t_star = record.t[mid];
    record.d_at_t_star = record.d[mid];
    return record;
  }

  auto d_of = [&diameters](double t) {
    const auto [alpha, beta] = diameters(t);
    return beta - alpha;
  };
  for (std::size_t i = 0; i + 1 < record.t.size(); ++i) {
    const double a = record.d[i];
    const double b = record.d[i + 1];
    if (std::abs(a) < root_tol || a * b <= 0.0) {
      const RootResult root =
          bisect_sign_change(d_of, record.t[i], record.t[i + 1], a, b, root_tol, max_iter);
      record.outcome = root.converged ? PathOutcome::Root : PathOutcome::NoRoot;
      record.t_star = root.t;
      record.d_at_t_star = root.value;
      record.bisection_iterations = root.iterations;
      return record;
    }
  }
  if (std::abs(record.d.back()) < root_tol) {
    record.outcome = PathOutcome::Root;
    record.t_star = record.t.back();
    record.d_at_t_star = record.d.back();
    return record;
  }
  record.outcome = PathOutcome::NoRoot;
  return record;
}

PathRecord appendix_path_search(const Scenario& scenario, const Vec& x0, const Vec& y0,
                                double partner_tol)
{
  scenario.validate();
  const PartnerSearch search(scenario);
  const SurfacePath alpha = SurfacePath::between_points(scenario.surface, x0, y0);

  std::vector<std::pair<double, double>> partner_log;
  auto diameters = [&](double t) {
    const Vec a = alpha(t);
    const PartnerResult beta = search.find(a);
    partner_log.emplace_back(t, beta.distance);
    const double diam_a = graze_diameter(graze(scenario.body, a, scenario.meridians));
    const double diam_b = graze_diameter(graze(scenario.body, beta.y, scenario.meridians));
    return DiameterPair{diam_a, diam_b};
  };

  PathRecord record = path_record(diameters);
  // The first grid_points evaluations are the grid, in order.
  for (std::size_t i = 0; i < record.t.size(); ++i) {
    record.partner_distance.push_back(partner_log[i].second);
  }
  for (const auto& [t, distance] : partner_log) {
    if (!(distance < partner_tol)) {
      record.partners_within_tolerance = false;
    }
  }
  return record;
}

}  // namespace dcone
