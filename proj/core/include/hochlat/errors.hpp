#pragma once

#include <stdexcept>
#include <string>

namespace hochlat {

/// Base for all library errors. `kind()` is a stable machine-readable tag
/// (e.g. "NonAssociative", "ResourceLimit") used by the CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// A mathematical law failed to hold on the given input (bad table,
/// non-homomorphism, non-symmetric module, ...). CLI exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured cap (table size, chain-space dimension) was exceeded.
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& message)
      : Error("ResourceLimit", message) {}
};

/// File or JSON problem.
class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("Io", message) {}
};

/// Caller misuse: bad index, mismatched bases, degree out of range.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace hochlat
