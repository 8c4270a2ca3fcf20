#pragma once

#include <stdexcept>
#include <string>

namespace incalg {

/// Base of every error raised by the library. `kind()` is the stable error
/// class name used in JSON reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// The input map is not a preserver of the requested kind.
class NotPreserverError : public Error {
 public:
  using Error::Error;
};

/// A step that the underlying theorems guarantee cannot fail did fail.
/// Either an implementation bug or a violated hypothesis.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

#define INCALG_DECLARE_ERROR(Name, Base)                                   \
  class Name : public Base {                                               \
   public:                                                                 \
    explicit Name(const std::string& what) : Base(#Name, what) {}          \
  };

// poset
INCALG_DECLARE_ERROR(CycleError, Error)
INCALG_DECLARE_ERROR(UnknownLabel, Error)
INCALG_DECLARE_ERROR(EmptyPoset, Error)
INCALG_DECLARE_ERROR(DisconnectedPoset, Error)
// field
INCALG_DECLARE_ERROR(DivisionByZero, Error)
INCALG_DECLARE_ERROR(FieldMismatch, Error)
INCALG_DECLARE_ERROR(NotFound, Error)
INCALG_DECLARE_ERROR(InfiniteField, Error)
INCALG_DECLARE_ERROR(UnsupportedField, Error)
// algebra
INCALG_DECLARE_ERROR(StructureMismatch, Error)
INCALG_DECLARE_ERROR(IncomparablePair, Error)
INCALG_DECLARE_ERROR(NotInvertible, Error)
// potents
INCALG_DECLARE_ERROR(BudgetExceeded, Error)
INCALG_DECLARE_ERROR(NotIdempotent, Error)
INCALG_DECLARE_ERROR(NotCommuting, Error)
INCALG_DECLARE_ERROR(NotKPotent, Error)
INCALG_DECLARE_ERROR(NoPrimitiveRoot, Error)
INCALG_DECLARE_ERROR(HypothesesNotMet, Error)
// linmaps
INCALG_DECLARE_ERROR(Singular, Error)
INCALG_DECLARE_ERROR(DimensionMismatch, Error)
// classify
INCALG_DECLARE_ERROR(NotJordanAutomorphism, NotPreserverError)
INCALG_DECLARE_ERROR(NotIdempotentPreserver, NotPreserverError)
INCALG_DECLARE_ERROR(NotKPotentPreserver, NotPreserverError)
INCALG_DECLARE_ERROR(NotBijective, NotPreserverError)
INCALG_DECLARE_ERROR(PhiDeltaNotScalar, InternalConsistencyError)
INCALG_DECLARE_ERROR(RootConditionFailed, InternalConsistencyError)
INCALG_DECLARE_ERROR(DownstreamJordanFailure, InternalConsistencyError)
INCALG_DECLARE_ERROR(LambdaNotOrderMap, InternalConsistencyError)
INCALG_DECLARE_ERROR(RecompositionMismatch, InternalConsistencyError)
INCALG_DECLARE_ERROR(ThetaNotSingleBasisVector, InternalConsistencyError)
INCALG_DECLARE_ERROR(ThetaNotBijective, InternalConsistencyError)
INCALG_DECLARE_ERROR(NuNotCentral, InternalConsistencyError)
INCALG_DECLARE_ERROR(CertificateFailed, InternalConsistencyError)
INCALG_DECLARE_ERROR(UnsupportedRegime, Error)
// harness / io
INCALG_DECLARE_ERROR(ClaimFailed, Error)
INCALG_DECLARE_ERROR(ParseError, Error)

#undef INCALG_DECLARE_ERROR

}  // namespace incalg
