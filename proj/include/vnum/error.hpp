#ifndef VNUM_ERROR_HPP
#define VNUM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vnum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad vertex, bad family parameter, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (JSON, graph6, certificate files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed a configured size cap.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same mathematical quantity disagree.
class DisagreementError : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

}  // namespace vnum

#endif  // VNUM_ERROR_HPP
