#pragma once

#include <stdexcept>
#include <string>

namespace qedccr {

//! Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Kinematics outside the supported domain (θ endpoints, μ ≤ 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

//! A state that is not (or cannot be) normalized.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

//! All outgoing amplitudes cancel; the filtered final state is undefined.
class DegenerateOutcomeError : public Error {
 public:
  using Error::Error;
};

//! Requested a mixing angle for a row that is not a two-term Bell mix.
class NotTwoTermMixError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ZeroInitialEntanglementError : public Error {
 public:
  using Error::Error;
};

class SingularDenominatorError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

}  // namespace qedccr
