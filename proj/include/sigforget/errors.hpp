// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigforget {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error while reading a formula or knowledge-base file.
/// Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configurable resource budget was exceeded (expansion caps, CNF
/// blowup, enumeration limits, solver decision budget).
class CapError : public Error {
 public:
  using Error::Error;
};

/// A precondition on arguments was violated (occurrence-count mismatch,
/// projection target outside the signature, unassigned atom, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested a measure on an input the defining formula does not cover.
class UndefinedMeasureError : public Error {
 public:
  using Error::Error;
};

}  // namespace sigforget
