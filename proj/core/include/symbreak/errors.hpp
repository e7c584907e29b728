#pragma once

#include <stdexcept>
#include <string>

namespace symbreak {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define SYMBREAK_ERROR(Name)                                                   \
  struct Name : Error {                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}       \
  }

SYMBREAK_ERROR(ParseError);
SYMBREAK_ERROR(DegenerateSimplex);
SYMBREAK_ERROR(DimensionMismatch);
SYMBREAK_ERROR(LengthMismatch);
SYMBREAK_ERROR(SearchExhausted);
SYMBREAK_ERROR(DuplicateCoordinate);
SYMBREAK_ERROR(ImageOutsideDomain);
SYMBREAK_ERROR(NotInIN);
SYMBREAK_ERROR(NotInVariantDomain);
SYMBREAK_ERROR(OutsideSimplex);
SYMBREAK_ERROR(InvalidAtom);
SYMBREAK_ERROR(AtomNotValid);
SYMBREAK_ERROR(UnsupportedDimension);
SYMBREAK_ERROR(FixedPointOutsideB);
SYMBREAK_ERROR(ConstructionFailed);
SYMBREAK_ERROR(RateAboveBound);
SYMBREAK_ERROR(NotAsymmetric);
SYMBREAK_ERROR(NoPassingA);
SYMBREAK_ERROR(ParameterOutOfRange);
SYMBREAK_ERROR(InsufficientSamples);

#undef SYMBREAK_ERROR

}  // namespace symbreak
