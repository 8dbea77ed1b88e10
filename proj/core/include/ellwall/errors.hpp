#pragma once

#include <stdexcept>
#include <string>

namespace ellwall {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (bad dimensions, non-roots, mixed weights).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested Cartan type is outside the supported tame/elliptic range.
class UnsupportedType : public Error {
 public:
  using Error::Error;
};

// A state or mode exceeds the truncation an operator was built for.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// Extended-mode field requested without the conventions it depends on.
class ConventionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ellwall
