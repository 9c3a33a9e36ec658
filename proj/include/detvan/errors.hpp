#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detvan {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands do not fit together (variable-list mismatch, unknown names).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's mathematical domain (zero polynomial, unit germ).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A basis computation exceeded the configured degree budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Model file is well-formed but violates the model contract.
class ModelError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), message_(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The message without the offset suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// Lê–Greuel recursion met a non-isolated germ; `level` is the number of
/// equations in the offending partial system (1-based).
class NonIsolatedError : public DomainError {
 public:
  NonIsolatedError(const std::string& what, std::size_t level)
      : DomainError(what + " (level " + std::to_string(level) + ")"), level_(level) {}

  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

}  // namespace detvan
