#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dcone {

enum class ErrorCode {
  InvalidInput,
  DegenerateSamples,
  ApexInsideBody,
  GeometryInconsistent,
  NotCongruent,
  DegenerateChord,
  TranslationNotHomothety,
  DegenerateConfiguration,
  DegenerateReflection,
  InvalidAngle,
  Schema,
};

std::string_view to_string(ErrorCode code);

class GeometryError : public std::runtime_error
{
public:
  GeometryError(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Raised when two cones fail the translation-congruence precondition.
class NotCongruentError : public GeometryError
{
public:
  NotCongruentError(double distance, double tolerance);

  double distance() const noexcept { return distance_; }

private:
  double distance_;
};

}  // namespace dcone
