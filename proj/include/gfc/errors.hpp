#pragma once

#include <stdexcept>
#include <string>

namespace gfc {

// Base class for every failure this library reports.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define GFC_ERROR_TYPE(NAME)                                        \
  class NAME : public Error {                                       \
  public:                                                           \
    explicit NAME(const std::string& what) : Error(#NAME ": " + what) {} \
  }

// Input / domain errors.
GFC_ERROR_TYPE(ParseError);
GFC_ERROR_TYPE(DegenerateTriple);
GFC_ERROR_TYPE(DegenerateConfiguration);
GFC_ERROR_TYPE(InvalidLambda);
GFC_ERROR_TYPE(NotAnticonformal);
GFC_ERROR_TYPE(NotOnCurve);
GFC_ERROR_TYPE(RamifiedFiber);
GFC_ERROR_TYPE(NonHyperbolic);
GFC_ERROR_TYPE(NotAMapToConjugate);
GFC_ERROR_TYPE(Overflow);

// Numerical / search failures.
GFC_ERROR_TYPE(NotFiniteOrder);
GFC_ERROR_TYPE(InconsistentOrbitLengths);
GFC_ERROR_TYPE(NoLift);
GFC_ERROR_TYPE(CapExceeded);

#undef GFC_ERROR_TYPE

}  // namespace gfc
