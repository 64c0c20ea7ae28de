/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace pev {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PEV_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

PEV_DEFINE_ERROR(DepthMismatch);
PEV_DEFINE_ERROR(CarrierMismatch);
PEV_DEFINE_ERROR(PartialFunction);
PEV_DEFINE_ERROR(EnumerationLimitExceeded);
PEV_DEFINE_ERROR(UnsupportedInstance);
PEV_DEFINE_ERROR(NotComposable);
PEV_DEFINE_ERROR(InvalidWitness);
PEV_DEFINE_ERROR(IndexOutOfRange);
PEV_DEFINE_ERROR(DimensionMismatch);
PEV_DEFINE_ERROR(PreconditionViolated);
PEV_DEFINE_ERROR(InvalidDilation);
PEV_DEFINE_ERROR(DomainMismatch);
PEV_DEFINE_ERROR(InvalidStructure);
PEV_DEFINE_ERROR(ParseError);

// Raised when an invariant that the mathematics guarantees fails to hold.
// Reaching it means a bug in this library, never bad input.
PEV_DEFINE_ERROR(InternalError);

#undef PEV_DEFINE_ERROR

}  // namespace pev
