#pragma once

#include <stdexcept>
#include <string>

namespace monadforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in different fields (e.g. F_p and F_q with p != q).
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A rational value cannot be reduced modulo p (p divides its denominator).
class BadReduction : public Error {
 public:
  using Error::Error;
};

class DegenerateForm : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A skew form has the wrong rank for the operation (e.g. presentation needs 2n+2).
class WrongRank : public Error {
 public:
  WrongRank(std::size_t expected, std::size_t actual)
      : Error("wrong rank: expected " + std::to_string(expected) + ", got " +
              std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}
  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// An octuple whose product matrix is not a net (condition (i) fails).
class BlockMismatch : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; `where` is a JSON-pointer-like location.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace monadforge
