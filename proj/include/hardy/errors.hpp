#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

// Precondition violations on mathematical domains (bad exponent, argument
// outside a stated interval, degenerate input). what() names the precondition.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An iterative scheme hit its budget without meeting its stability target.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

class ZeroVector : public DomainError {
 public:
  explicit ZeroVector(const std::string& what) : DomainError(what) {}
};

class ZeroMatrix : public DomainError {
 public:
  explicit ZeroMatrix(const std::string& what) : DomainError(what) {}
};

class SingularMatrix : public DomainError {
 public:
  explicit SingularMatrix(const std::string& what) : DomainError(what) {}
};

class NonFinite : public DomainError {
 public:
  explicit NonFinite(const std::string& what) : DomainError(what) {}
};

class DimensionMismatch : public DomainError {
 public:
  explicit DimensionMismatch(const std::string& what) : DomainError(what) {}
};

// A Mahler-measure quadrature was requested for a polynomial with a zero too
// close to the unit circle for the log integrand to be trusted.
class NearCircleZero : public DomainError {
 public:
  explicit NearCircleZero(const std::string& what) : DomainError(what) {}
};

// Extremal boundary construction needs |gamma| != |delta|.
class DegenerateDirection : public DomainError {
 public:
  explicit DegenerateDirection(const std::string& what) : DomainError(what) {}
};

}  // namespace hardy
