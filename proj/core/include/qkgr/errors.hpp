#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qkgr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different variable spaces.
class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input that should be symmetric in a block of roots is not.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

// A computation exceeded its configured budget (S-pairs, truncation order).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found)
      : Error("parse error at position " + std::to_string(position) + ": expected " + expected +
              ", found " + found),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

}  // namespace qkgr
