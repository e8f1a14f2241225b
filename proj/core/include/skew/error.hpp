#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skew {

/// Malformed concrete syntax. `offset` is a byte offset into the input.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A derivation (or translation input) that does not fit the rule it claims.
/// `path` locates the offending node: "root" or "root.1.0" (premise indices).
class TypeError : public std::runtime_error {
 public:
  TypeError(const std::string& msg, std::string path = "root")
      : std::runtime_error(path + ": " + msg), msg_(msg), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }
  /// The message without the path prefix.
  const std::string& message() const noexcept { return msg_; }

 private:
  std::string msg_;
  std::string path_;
};

/// A configured resource limit (cardinality cap, result cap, step budget).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Should be unreachable on well-typed input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace skew
