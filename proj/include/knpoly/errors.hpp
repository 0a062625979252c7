/* Copyright 2026 The knpoly Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef KNPOLY_ERRORS_HPP_
#define KNPOLY_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace knpoly {

// Exit-code categories used by the CLI: 2 = input validation, 3 = a theorem
// hypothesis or trace gate failed, 4 = internal cross-check disagreement.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  virtual int exit_code() const noexcept { return 1; }

 private:
  std::string name_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

class HypothesisViolation : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

class InternalError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

#define KNPOLY_VALIDATION_ERROR(NAME)                                  \
  class NAME : public ValidationError {                                \
   public:                                                             \
    explicit NAME(const std::string& what) : ValidationError(#NAME, what) {} \
  }

#define KNPOLY_HYPOTHESIS_ERROR(NAME)                                  \
  class NAME : public HypothesisViolation {                            \
   public:                                                             \
    explicit NAME(const std::string& what)                             \
        : HypothesisViolation(#NAME, what) {}                          \
  }

// Field construction and arithmetic.
KNPOLY_VALIDATION_ERROR(NonPrimeCharacteristic);
KNPOLY_VALIDATION_ERROR(ReducibleModulus);
KNPOLY_VALIDATION_ERROR(DivisionByZero);
KNPOLY_VALIDATION_ERROR(MismatchedFields);

// Polynomial algebra.
KNPOLY_VALIDATION_ERROR(BothZero);
KNPOLY_VALIDATION_ERROR(ZeroConstantTerm);
KNPOLY_VALIDATION_ERROR(DegreeMismatch);

// Extension-field operations.
KNPOLY_VALIDATION_ERROR(ImproperGamma);
KNPOLY_VALIDATION_ERROR(ZeroTheta);
KNPOLY_VALIDATION_ERROR(ThetaOutsidePrimeField);

// k-normality classification.
KNPOLY_VALIDATION_ERROR(ReducibleInput);
KNPOLY_VALIDATION_ERROR(KOutOfRange);

// Construction gates.
KNPOLY_HYPOTHESIS_ERROR(UnsupportedDegreeShape);
KNPOLY_HYPOTHESIS_ERROR(NotPrimitiveModR);
KNPOLY_HYPOTHESIS_ERROR(KTooLarge);
KNPOLY_HYPOTHESIS_ERROR(TraceGateFailed);
KNPOLY_VALIDATION_ERROR(NonCoprimePair);
KNPOLY_VALIDATION_ERROR(ZeroDeltaPair);
KNPOLY_VALIDATION_ERROR(InvalidDeltas);

// CLI / search.
KNPOLY_VALIDATION_ERROR(ParseError);
KNPOLY_VALIDATION_ERROR(BudgetExceeded);

// Cross-method verification.
class MethodDisagreement : public InternalError {
 public:
  explicit MethodDisagreement(const std::string& what)
      : InternalError("MethodDisagreement", what) {}
};

#undef KNPOLY_VALIDATION_ERROR
#undef KNPOLY_HYPOTHESIS_ERROR

}  // namespace knpoly

#endif  // KNPOLY_ERRORS_HPP_
