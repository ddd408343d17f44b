#pragma once

#include <stdexcept>
#include <string>

namespace foliage {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContextMismatch : Error {
  ContextMismatch() : Error("context mismatch") {}
};

// Input outside an operation's domain (wrong degree, arity, shape).
struct DomainError : Error {
  using Error::Error;
};

// Rational coefficients where the operation needs polynomials.
struct NotPolynomial : DomainError {
  NotPolynomial() : DomainError("polynomial coefficients required") {}
};

// Symbolic parameters where a numeric answer is required.
struct ParametersPresent : DomainError {
  ParametersPresent() : DomainError("substitute parameters first") {}
};

struct TopDegree : DomainError {
  TopDegree() : DomainError("top degree: exterior derivative would exceed the arity") {}
};

}  // namespace foliage
