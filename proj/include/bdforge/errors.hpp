#pragma once

#include <stdexcept>
#include <string>

namespace bdforge {

/// Base class for every error raised by the engine. The C API maps each
/// subclass onto a status code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad index, malformed triple,
/// wrong dimensions, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

class UnsupportedType : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

class UnsupportedRank : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

class PiConditionViolated : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

// The remaining errors signal that an exact post-condition check failed.
// None of them should ever fire on valid input.

class IdentityViolation : public Error {
public:
  using Error::Error;
};

class VerificationFailed : public Error {
public:
  using Error::Error;
};

class NoSolution : public Error {
public:
  using Error::Error;
};

class AxiomViolation : public Error {
public:
  AxiomViolation(std::string axiom, int witness)
      : Error("axiom '" + axiom + "' fails on basis element " + std::to_string(witness)),
        axiom_(std::move(axiom)), witness_(witness) {}

  const std::string& axiom() const { return axiom_; }
  int witness() const { return witness_; }

private:
  std::string axiom_;
  int witness_;
};

class NotLieMorphism : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class NotClosed : public Error {
public:
  using Error::Error;
};

}  // namespace bdforge
