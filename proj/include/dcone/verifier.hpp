#pragma once

#include "dcone/body.hpp"
#include "dcone/cone.hpp"
#include "dcone/homothety.hpp"
#include "dcone/surface.hpp"
#include "dcone/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dcone {

struct Tolerances
{
  double congruence = 1e-6;
  double ratio = 1e-6;
  double center = 1e-6;
  double symmetry = 1e-6;
};

/// A body K inside a star surface L together with the sampling and
/// tolerance settings of one verification run.
struct Scenario
{
  ConvexBody body;
  StarSurface surface;
  std::size_t samples = 200;
  int meridians = kDefaultMeridians;
  Tolerances tolerances{};
  std::uint64_t seed = 0;
  double clearance = 1e-3;

  /// Throws InvalidInput unless n >= 3, N >= 8, M >= 8, tolerances > 0 and
  /// bd K stays at least `clearance` radially inside L.
  void validate() const;
};

struct PartnerResult
{
  Vec y;
  double distance = 0.0;
};

/// Partner search over L for translate-congruent support cones. Candidate
/// partners lie on the far side of K from the apex, i.e.
/// <y - r, x - r> < 0 for the interior reference point r of K, which rules
/// out the trivial solution y = x. Cones at the N grid points are computed
/// once at construction and shared by every query. The search runs on
/// coarser cones (at most 64 meridians) compared through their generator
/// loops; the reported distance uses the full M meridians.
class PartnerSearch
{
public:
  explicit PartnerSearch(Scenario scenario);

  /// Coarse pass over the grid followed by Nelder-Mead refinement in a
  /// local chart of L around the best grid point.
  PartnerResult find(const Vec& x) const;

  const PointList& grid() const noexcept { return grid_; }
  const Scenario& scenario() const noexcept { return scenario_; }

private:
  DoubleCone cone_at(const Vec& apex, int meridians) const;

  Scenario scenario_;
  int search_meridians_;
  PointList grid_;
  std::vector<std::optional<DoubleCone>> cones_;
};

PartnerResult find_partner(const Scenario& scenario, const Vec& x);

struct ApexRecord
{
  std::size_t index = 0;
  Vec x;
  std::optional<Vec> y;
  double distance = 0.0;
  bool pass = false;
  std::optional<double> ratio;
  std::optional<double> center_defect;
  std::optional<bool> unit_inverse;
  std::string error;
};

enum class Verdict { Verified, HypothesisFailed, ConclusionFailed };

std::string to_string(Verdict verdict);

struct Conclusion
{
  Vec k_center;
  Vec l_center;
  double k_asymmetry = 0.0;
  double l_symmetry_defect = 0.0;
  double concentricity_defect = 0.0;
  /// Fraction of passing apexes whose graze pair is a point reflection
  /// about (x + y) / 2.
  double unit_inverse_fraction = 0.0;
};

struct TheoremReport
{
  std::vector<ApexRecord> apexes;
  bool hypothesis_pass = false;
  Conclusion conclusion;
  Verdict verdict = Verdict::HypothesisFailed;

  double max_distance() const;
};

/// Runs the partner search from each of the N sampled apexes.
std::vector<ApexRecord> verify_hypothesis(const Scenario& scenario);

/// Certifies the symmetry conclusion and fills the verdict.
TheoremReport verify_conclusion(const Scenario& scenario, std::vector<ApexRecord> records);

TheoremReport check_theorem(const Scenario& scenario);

// --- continuity search along a path of apexes ---------------------------

struct RootResult
{
  double t = 0.0;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Bisection on [lo, hi] given f(lo) * f(hi) <= 0. Stops when |f| < tol or
/// after max_iter halvings.
RootResult bisect_sign_change(const std::function<double(double)>& f, double lo, double hi,
                              double f_lo, double f_hi, double tol = 1e-8, int max_iter = 40);

enum class PathOutcome { Root, Degenerate, NoRoot };

std::string to_string(PathOutcome outcome);

struct PathRecord
{
  std::vector<double> t;
  std::vector<double> d;
  std::vector<double> r;
  std::vector<double> diam_alpha;
  std::vector<double> diam_beta;
  std::vector<double> partner_distance;  ///< empty for synthetic paths
  PathOutcome outcome = PathOutcome::NoRoot;
  std::optional<double> t_star;
  double d_at_t_star = 0.0;
  int bisection_iterations = 0;
  bool partners_within_tolerance = true;

  /// max |d - (1 - r) diam_beta| over the grid.
  double identity_defect() const;
};

/// (diam of the graze from alpha(t), diam of the graze from beta(t)).
using DiameterPair = std::pair<double, double>;

/// d(t) = diam_beta - diam_alpha and r(t) = diam_alpha / diam_beta on a
/// uniform grid, then a bracketed root of d.
PathRecord path_record(const std::function<DiameterPair(double)>& diameters, int grid_points = 33,
                       double root_tol = 1e-8, int max_iter = 40);

/// alpha runs along L from x0 to y0, beta(t) is the partner of alpha(t).
/// `partner_tol` is the relaxed congruence threshold along the path.
PathRecord appendix_path_search(const Scenario& scenario, const Vec& x0, const Vec& y0,
                                double partner_tol = 1e-3);

// --- sections of L by pairs of parallel support hyperplanes --------------

struct SectionRecord
{
  Vec direction;
  Vec k_plus;
  Vec k_minus;
  PointList loop_plus;
  PointList loop_minus;
  std::optional<HomothetyFit> fit;
  double chord_defect = 0.0;  ///< distance from the homothety center to [k+, k-]
  std::string error;
};

/// For each direction u, cuts L with Pi(u, h(u)) and Pi(-u, h(-u)) and fits
/// an inverse homothety between the two section loops (R^3 only).
std::vector<SectionRecord> conjecture1_scan(const Scenario& scenario, std::span<const Vec> directions,
                                            int loop_points = 128);

/// Distance from p to the segment [a, b].
double distance_to_segment(const Vec& p, const Vec& a, const Vec& b);

}  // namespace dcone
