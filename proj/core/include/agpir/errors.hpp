#pragma once

#include <stdexcept>

namespace agpir {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact computation would exceed its enumeration guard. Guards are hard
// errors, never silent approximations.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace agpir
