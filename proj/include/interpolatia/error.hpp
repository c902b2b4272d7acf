#pragma once

#include <stdexcept>
#include <string>

namespace interpolatia {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define INTERPOLATIA_DEFINE_ERROR(Name)              \
  class Name : public Error {                        \
   public:                                           \
    explicit Name(const std::string& what)           \
        : Error(std::string(#Name ": ") + what) {}   \
  };

// exactalg
INTERPOLATIA_DEFINE_ERROR(ZeroDenominator)
INTERPOLATIA_DEFINE_ERROR(PoleAtPoint)
INTERPOLATIA_DEFINE_ERROR(WrongParameterSet)
INTERPOLATIA_DEFINE_ERROR(NotExactDivision)

// partitions
INTERPOLATIA_DEFINE_ERROR(InvalidPartition)
INTERPOLATIA_DEFINE_ERROR(LengthMismatch)
INTERPOLATIA_DEFINE_ERROR(BoxOutsideShape)
INTERPOLATIA_DEFINE_ERROR(TooManyRows)
INTERPOLATIA_DEFINE_ERROR(NotHorizontalStrip)
INTERPOLATIA_DEFINE_ERROR(SizeOutOfRange)

// families / coefficients
INTERPOLATIA_DEFINE_ERROR(NotACover)
INTERPOLATIA_DEFINE_ERROR(SingularSystem)
INTERPOLATIA_DEFINE_ERROR(RouteMismatch)
INTERPOLATIA_DEFINE_ERROR(DegenerateNorm)
INTERPOLATIA_DEFINE_ERROR(CapExceeded)

// positivity
INTERPOLATIA_DEFINE_ERROR(PartTooLarge)

#undef INTERPOLATIA_DEFINE_ERROR

}  // namespace interpolatia
