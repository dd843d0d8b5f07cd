#pragma once

#include <stdexcept>
#include <string>

namespace curvpinch {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CURVPINCH_DEFINE_ERROR(Name)       \
  class Name : public Error {              \
   public:                                 \
    explicit Name(const std::string& msg)  \
        : Error(#Name ": " + msg) {}       \
  };

CURVPINCH_DEFINE_ERROR(NonOrthonormalInput)
CURVPINCH_DEFINE_ERROR(NonUnitInput)
CURVPINCH_DEFINE_ERROR(WrongDuality)
CURVPINCH_DEFINE_ERROR(InvalidSymmetry)
CURVPINCH_DEFINE_ERROR(BudgetTooSmall)
CURVPINCH_DEFINE_ERROR(DegenerateForm)
CURVPINCH_DEFINE_ERROR(PinchingNotVerified)
CURVPINCH_DEFINE_ERROR(NotHomogeneous)
CURVPINCH_DEFINE_ERROR(NonPositiveInput)
CURVPINCH_DEFINE_ERROR(NonPositiveScalarCurvature)
CURVPINCH_DEFINE_ERROR(InconsistentInputs)
CURVPINCH_DEFINE_ERROR(UnknownModel)
CURVPINCH_DEFINE_ERROR(NonPositiveParam)
CURVPINCH_DEFINE_ERROR(SamplingExhausted)
CURVPINCH_DEFINE_ERROR(ParseError)

#undef CURVPINCH_DEFINE_ERROR

}  // namespace curvpinch
