#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bondtree {

// Base for every error raised by the library. Each subclass maps to one
// failure kind callers are expected to distinguish.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnknownProtein : public Error {
 public:
  explicit UnknownProtein(const std::string& id)
      : Error("unknown protein '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class DuplicateProtein : public Error {
 public:
  explicit DuplicateProtein(const std::string& id)
      : Error("duplicate protein '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

// A value outside [0, 100] was read from a matrix that never went through
// validate().
class UnvalidatedMatrix : public Error {
 public:
  using Error::Error;
};

class IdMismatch : public Error {
 public:
  using Error::Error;
};

namespace detail {
inline std::string located(const std::string& source) { return source.empty() ? "" : source + ": "; }
}  // namespace detail

// 1-based line and column (column counts comma-separated fields). `source`
// names the file when known.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what, const std::string& source = "")
      : Error(detail::located(source) + "line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class HeaderMismatch : public Error {
 public:
  HeaderMismatch(std::size_t line, const std::string& expected, const std::string& found,
                 const std::string& source = "")
      : Error(detail::located(source) + "line " + std::to_string(line) + ": row label '" + found +
              "' does not match column header '" + expected + "'"),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ManifestError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid document (tree JSON and similar).
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EmptyTree : public Error {
 public:
  EmptyTree() : Error("tree is empty") {}
};

class MismatchedTrace : public Error {
 public:
  using Error::Error;
};

}  // namespace bondtree
