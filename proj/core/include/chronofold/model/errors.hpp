#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chronofold {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when input records violate a table invariant. `key` names the
// offending (time, variable, individual) triple or column when known.
class IngestError : public Error {
 public:
  IngestError(const std::string& message, std::string key = {})
      : Error(message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class InteractionError : public Error {
 public:
  using Error::Error;
};

// The interaction stream cannot be replayed (e.g. a group snapshot is missing).
class UnrecoverableState : public Error {
 public:
  using Error::Error;
};

class LinkError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace chronofold
