#pragma once

#include <stdexcept>
#include <string>

namespace bsq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A physical input was non-positive or otherwise outside its allowed range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A function was evaluated outside its mathematical domain (e.g. y <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unknown mode label, duplicate label, or missing +/- partner.
class RegistryError : public Error {
 public:
  using Error::Error;
};

class ModeCollision : public Error {
 public:
  using Error::Error;
};

/// Hamiltonian input that is not Hermitian, or malformed coefficients.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// xi requested for two modes with zero total population.
class UndefinedSqueezing : public Error {
 public:
  using Error::Error;
};

/// A variance came out negative beyond round-off, or an integrator failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class CutoffError : public Error {
 public:
  CutoffError(const std::string& what, int required_cutoff)
      : Error(what), required_cutoff_(required_cutoff) {}
  int required_cutoff() const { return required_cutoff_; }

 private:
  int required_cutoff_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::string key = {}, int line = 0)
      : Error(what), key_(std::move(key)), line_(line) {}
  const std::string& key() const { return key_; }
  int line() const { return line_; }

 private:
  std::string key_;
  int line_;
};

}  // namespace bsq
