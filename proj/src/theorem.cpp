#include "dcone/error.hpp"
#include "dcone/parallel.hpp"
#include "dcone/sampling.hpp"
#include "dcone/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dcone {

namespace {

constexpr std::size_t kSymmetryDirections = 512;

}  // namespace

std::string to_string(Verdict verdict)
{
  switch (verdict) {
    case Verdict::Verified: return "verified";
    case Verdict::HypothesisFailed: return "hypothesis-failed";
    case Verdict::ConclusionFailed: return "conclusion-failed";
  }
  return "unknown";
}

double TheoremReport::max_distance() const
{
  double worst = 0.0;
  for (const auto& record : apexes) {
    if (record.error.empty()) {
      worst = std::max(worst, record.distance);
    }
  }
  return worst;
}

std::vector<ApexRecord> verify_hypothesis(const Scenario& scenario)
{
  scenario.validate();
  const PartnerSearch search(scenario);
  const PointList& apexes = search.grid();
  std::vector<ApexRecord> records(apexes.size());
  parallel_for(apexes.size(), [&](std::size_t i) {
    ApexRecord& record = records[i];
    record.index = i;
    record.x = apexes[i];
    try {
      const PartnerResult partner = search.find(apexes[i]);
      record.y = partner.y;
      record.distance = partner.distance;
      record.pass = partner.distance < scenario.tolerances.congruence;
    } catch (const GeometryError& e) {
      record.distance = std::numeric_limits<double>::infinity();
      record.pass = false;
      record.error = e.what();
    }
  });
  return records;
}

TheoremReport verify_conclusion(const Scenario& scenario, std::vector<ApexRecord> records)
{
  const Tolerances& tol = scenario.tolerances;
  TheoremReport report;
  report.hypothesis_pass =
      !records.empty() && std::all_of(records.begin(), records.end(), [](const ApexRecord& r) { return r.pass; });

  // Every congruent pair should be a point reflection of grazes about (x + y) / 2.
  parallel_for(records.size(), [&](std::size_t i) {
    ApexRecord& record = records[i];
    if (!record.pass || !record.y) {
      return;
    }
    try {
      const CorrespondedPair pairs =
          paired_graze(scenario.body, record.x, *record.y, tol.congruence, scenario.meridians);
      const HomothetyFit fit = homothety_fit(pairs);
      const UnitInverseCheck check = unit_inverse_check(fit, record.x, *record.y, tol.ratio, tol.center);
      record.ratio = fit.ratio;
      record.center_defect = check.center_defect;
      record.unit_inverse = check.pass;
    } catch (const GeometryError& e) {
      record.unit_inverse = false;
      record.error = e.what();
    }
  });

  Conclusion& c = report.conclusion;
  const int n = scenario.body.dim();
  const PointList directions = default_directions(n, kSymmetryDirections);
  c.k_center = estimate_center(scenario.body, directions);
  c.k_asymmetry = central_asymmetry(scenario.body, c.k_center, directions);
  try {
    c.l_symmetry_defect = surface_symmetry_defect(scenario.surface, c.k_center);
  } catch (const GeometryError&) {
    c.l_symmetry_defect = std::numeric_limits<double>::infinity();
  }

  Vec midpoint_sum = Vec::Zero(n);
  std::size_t passing = 0;
  std::size_t unit_inverse = 0;
  for (const auto& record : records) {
    if (!record.pass || !record.y) {
      continue;
    }
    ++passing;
    midpoint_sum += 0.5 * (record.x + *record.y);
    if (record.unit_inverse.value_or(false)) {
      ++unit_inverse;
    }
  }
  // All the curves C_x ∩ C_y share their center, which is then the center of L.
  c.l_center = passing > 0 ? Vec(midpoint_sum / static_cast<double>(passing)) : scenario.surface.center();
  c.concentricity_defect = (c.k_center - c.l_center).norm();
  c.unit_inverse_fraction =
      passing > 0 ? static_cast<double>(unit_inverse) / static_cast<double>(passing) : 0.0;

  if (!report.hypothesis_pass) {
    report.verdict = Verdict::HypothesisFailed;
  } else if (c.k_asymmetry < tol.symmetry && c.l_symmetry_defect < tol.symmetry &&
             c.concentricity_defect < tol.center && unit_inverse == passing) {
    report.verdict = Verdict::Verified;
  } else {
    report.verdict = Verdict::ConclusionFailed;
  }
  report.apexes = std::move(records);
  return report;
}

TheoremReport check_theorem(const Scenario& scenario)
{
  return verify_conclusion(scenario, verify_hypothesis(scenario));
}

}  // namespace dcone
