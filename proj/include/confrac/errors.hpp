#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace confrac {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression source. `position()` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at position " + std::to_string(position) + ": " +
              message),
        position_(position),
        detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// Identifier that is neither a declared variable nor a known function.
class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown identifier '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Bad argument that is not a domain problem (malformed names, empty lists,
/// invalid finite-difference settings).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Finite-difference extrapolation failed to settle.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Base of all "input outside the mathematical domain" errors.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Fractional order outside (0, 1].
class InvalidOrder : public DomainError {
 public:
  explicit InvalidOrder(double alpha);
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Evaluation point with a coordinate that is not strictly positive.
class NonPositivePoint : public DomainError {
 public:
  NonPositivePoint(std::size_t index, double value);
  std::size_t index() const noexcept { return index_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t index_;
  double value_;
};

/// Chain-rule hypothesis violated: some inner component f_i(a) <= 0.
class CompositionDomainError : public DomainError {
 public:
  CompositionDomainError(std::size_t component, double value);
  std::size_t component() const noexcept { return component_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t component_;
  double value_;
};

/// Expression evaluated outside its domain. `path()` locates the offending
/// node, e.g. "f[0]/add:rhs/div".
class EvalDomainError : public DomainError {
 public:
  EvalDomainError(const std::string& reason, std::string path)
      : DomainError(reason), reason_(reason), path_(std::move(path)) {}

  const std::string& reason() const noexcept { return reason_; }
  const std::string& path() const noexcept { return path_; }
  const char* what() const noexcept override;

  /// Used while unwinding through parent nodes.
  void prepend(const std::string& step);

 private:
  std::string reason_;
  std::string path_;
  mutable std::string what_;
};

/// The value exists but the derivative rule does not apply
/// (sqrt at 0, variable exponent over a non-positive base).
class DerivativeDomainError : public EvalDomainError {
 public:
  using EvalDomainError::EvalDomainError;
};

}  // namespace confrac
