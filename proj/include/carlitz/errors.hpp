#pragma once

#include <stdexcept>
#include <string>

namespace carlitz {

/// Base of every error raised by the library. The CLI maps subclasses to
/// exit codes, so each failure mode gets its own type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class DivisionByIndistinguishableZero : public Error {
 public:
  DivisionByIndistinguishableZero()
      : Error("division by an element that is zero at its precision") {}
};

class NotAQthPower : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class OutsideUnitDisk : public Error {
 public:
  OutsideUnitDisk() : Error("evaluation point lies outside the closed unit disk") {}
};

class InsufficientTruncation : public Error {
 public:
  using Error::Error;
};

class OutsideLogDomain : public Error {
 public:
  OutsideLogDomain()
      : Error("argument outside the Carlitz logarithm domain |z| < |theta|^(q/(q-1))") {}
};

/// Raised when a root or value lives in a larger field than the working
/// field F_{q^e}((pi)). `kind` is "slope" (ramification) or "residual"
/// (residue extension).
class ExtensionRequired : public Error {
 public:
  ExtensionRequired(std::string kind, const std::string& what)
      : Error("extension required (" + kind + "): " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class IndeterminateValuation : public Error {
 public:
  using Error::Error;
};

class NonInvertible : public Error {
 public:
  using Error::Error;
};

class UnderdeterminedSystem : public Error {
 public:
  using Error::Error;
};

class NotCertified : public Error {
 public:
  using Error::Error;
};

class GammaExtractionFailed : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

class ContextError : public Error {
 public:
  using Error::Error;
};

}  // namespace carlitz
