#pragma once

#include <stdexcept>
#include <string>

namespace circalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live over different ground sets.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to exceed its configured edge cap.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotGeneralizedIncidence : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

inline void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw SizeLimitExceeded(std::string(what) + ": " + std::to_string(n) +
                            " elements exceeds cap " + std::to_string(cap));
  }
}

}  // namespace circalg
