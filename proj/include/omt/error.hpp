#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omt {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text (polynomial, digraph, matrix or perspective file).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates a precondition (unknown label, duplicate
/// arc label, non-basis, loop passed where a non-factor element is needed...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The 2^|E| enumeration guard refused to run.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A pair of oriented matroids is not a perspective.
class AxiomError : public Error {
 public:
  using Error::Error;
};

}  // namespace omt
