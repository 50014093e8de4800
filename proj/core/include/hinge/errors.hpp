#pragma once

#include <stdexcept>
#include <string>

namespace hinge {

/// Raised when a curve trace is requested but the arccos argument never
/// enters [-1, 1] (the solution curve is empty).
struct EmptyCurveError : std::runtime_error {
  explicit EmptyCurveError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation requires a point on the solution curve and the
/// supplied angles are not on it within tolerance.
struct NotOnCurveError : std::runtime_error {
  explicit NotOnCurveError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by pair construction when a recipe produces samples that are not
/// constructible or fail the validity condition.
struct InvalidSamplesError : std::runtime_error {
  explicit InvalidSamplesError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by pair construction when the candidate curves miss each other.
struct NoIntersectionError : std::runtime_error {
  explicit NoIntersectionError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by pair construction when both curves share the same slope
/// coefficient, so they either coincide or never cross.
struct DegenerateCurvesError : std::runtime_error {
  explicit DegenerateCurvesError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hinge
