#pragma once

#include <stdexcept>
#include <string>

namespace srt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input supplied by a caller.
class InputError : public Error {
 public:
  using Error::Error;
};

// An exact computation hit an impossible state (division by zero, a
// violated algebraic identity, non-convergence of an exact algorithm).
class MathError : public Error {
 public:
  using Error::Error;
};

}  // namespace srt
