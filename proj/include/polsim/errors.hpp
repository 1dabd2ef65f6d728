#pragma once

#include <stdexcept>
#include <string>

namespace polsim {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation invoked on a spectrum variant it cannot handle.
class UnsupportedVariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quadrature grid too coarse for the oscillation it has to resolve.
class ResolutionError : public std::runtime_error {
 public:
  ResolutionError(const std::string& what, int required_order)
      : std::runtime_error(what), required_order_(required_order) {}
  int required_order() const noexcept { return required_order_; }

 private:
  int required_order_;
};

/// Density matrix violating hermiticity / trace / positivity bounds.
class InvalidState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical breakdown that valid inputs should never reach.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad or incomplete user configuration; carries the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace polsim
