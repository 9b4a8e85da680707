#pragma once

#include <stdexcept>
#include <string>

namespace wmk {

class WmkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated input or theorem hypothesis. The CLI maps these to exit code 2.
class HypothesisError : public WmkError {
 public:
  using WmkError::WmkError;
};

class PreconditionError : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class DivisibilityError : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class NoTwistError : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class SmallnessError : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class UnsupportedFamily : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

/// A point-count polynomial with a non-integer coefficient.
class NonIntegerCoefficient : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Age requested for an element whose order is divisible by 3.
class WildElementError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Broken internal invariant. The CLI maps these to exit code 3.
class InternalError : public WmkError {
 public:
  using WmkError::WmkError;
};

class NonPolynomialResult : public InternalError {
 public:
  using InternalError::InternalError;
};

class DivergentSeries : public InternalError {
 public:
  using InternalError::InternalError;
};

class EnumerationCapExceeded : public WmkError {
 public:
  using WmkError::WmkError;
};

}  // namespace wmk
