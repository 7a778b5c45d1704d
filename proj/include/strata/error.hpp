#pragma once

#include <stdexcept>
#include <string>

namespace strata {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position_(pos) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class NonHomogeneous : public Error {
 public:
  using Error::Error;
};

class DenominatorInIdeal : public Error {
 public:
  using Error::Error;
};

class NotQCommuting : public Error {
 public:
  using Error::Error;
};

class NotLogCommuting : public Error {
 public:
  using Error::Error;
};

class NotMinorProduct : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class CaseUnverified : public Error {
 public:
  using Error::Error;
};

class NotMonomial : public Error {
 public:
  using Error::Error;
};

}  // namespace strata
