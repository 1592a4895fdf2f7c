#include "dcone/error.hpp"

#include <sstream>

namespace dcone {

std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::DegenerateSamples: return "degenerate-samples";
    case ErrorCode::ApexInsideBody: return "apex-inside-body";
    case ErrorCode::GeometryInconsistent: return "geometry-inconsistent";
    case ErrorCode::NotCongruent: return "not-congruent";
    case ErrorCode::DegenerateChord: return "degenerate-chord";
    case ErrorCode::TranslationNotHomothety: return "translation-not-homothety";
    case ErrorCode::DegenerateConfiguration: return "degenerate-configuration";
    case ErrorCode::DegenerateReflection: return "degenerate-reflection";
    case ErrorCode::InvalidAngle: return "invalid-angle";
    case ErrorCode::Schema: return "schema";
  }
  return "unknown";
}

namespace {

std::string not_congruent_message(double distance, double tolerance)
{
  std::ostringstream os;
  os.precision(17);
  os << "cone translation distance " << distance << " exceeds tolerance " << tolerance;
  return os.str();
}

}  // namespace

NotCongruentError::NotCongruentError(double distance, double tolerance)
  : GeometryError(ErrorCode::NotCongruent, not_congruent_message(distance, tolerance)),
    distance_(distance)
{
}

}  // namespace dcone
