#pragma once

#include <stdexcept>
#include <string>

namespace penta {

// Base of every error raised by the library.  code() is the stable
// machine-readable name used by the CLI and the service.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define PENTA_DEFINE_ERROR(Name, Default)                          \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& message = Default)            \
        : Error(#Name, message) {}                                 \
  };

PENTA_DEFINE_ERROR(ZeroVector, "homogeneous vector is zero")
PENTA_DEFINE_ERROR(CoincidentPoints, "points coincide")
PENTA_DEFINE_ERROR(CoincidentLines, "lines coincide")
PENTA_DEFINE_ERROR(NotCollinear, "points are not collinear")
PENTA_DEFINE_ERROR(DegenerateQuadruple, "cross ratio denominator vanishes")
PENTA_DEFINE_ERROR(DegenerateQuad, "three of four points are collinear")
PENTA_DEFINE_ERROR(SingularTransform, "transform is singular")
PENTA_DEFINE_ERROR(PointAtInfinity, "point is not in the affine chart")
PENTA_DEFINE_ERROR(ConstructionDegenerate, "join or meet degenerated")
PENTA_DEFINE_ERROR(WindowTooSmall, "window does not cover the request")
PENTA_DEFINE_ERROR(UnitProductDenominator, "product of adjacent labels equals 1")
PENTA_DEFINE_ERROR(EdgeOutsideRegion, "edge outside the filled region")
PENTA_DEFINE_ERROR(PointNotInterior, "point is not interior to the polygon")
PENTA_DEFINE_ERROR(NestingViolated, "nested polygons failed to nest")
PENTA_DEFINE_ERROR(MaxIterations, "iteration cap reached")
PENTA_DEFINE_ERROR(NoConvergence, "solver did not converge")
PENTA_DEFINE_ERROR(AverageNotValidSeed, "averaged polygon is not a seed")
PENTA_DEFINE_ERROR(ParseError, "malformed input")

#undef PENTA_DEFINE_ERROR

}  // namespace penta
