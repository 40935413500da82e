#pragma once

#include <stdexcept>
#include <string>

namespace funcbody {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: dimension mismatch, malformed weight, singular map, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A requested geometric quantity does not exist for the given input.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// zeta o u is identically zero, so the functional operators have no input.
class VanishingFunctionError : public Error {
 public:
  VanishingFunctionError() : Error("function vanishes") {}
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double estimate)
      : Error(what + " (error estimate " + std::to_string(estimate) + ")"),
        estimate_(estimate) {}

  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

/// Malformed JSON payloads and unknown CLI inputs.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace funcbody
