#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace latwb {

/// Base class of every error raised by the library. `code()` is a stable,
/// machine-readable identifier (e.g. "NotReduced"); the CLI emits it verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Input error tied to a line of a text file.
class ParseError : public Error {
 public:
  ParseError(std::string code, std::size_t line, const std::string& message)
      : Error(std::move(code), "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace latwb
