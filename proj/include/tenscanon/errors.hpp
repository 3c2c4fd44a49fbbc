#pragma once

#include <stdexcept>
#include <string>

namespace tenscanon {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: syntax errors, arity mismatches, invalid index usage,
/// inconsistent declarations. Maps to CLI exit code 1.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A configured resource cap was exceeded (search nodes, space dimension,
/// oracle dimension). The message names the offending size and the cap.
/// Maps to CLI exit code 2.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what_kind, std::uint64_t size, std::uint64_t cap)
      : Error(what_kind + ": size " + std::to_string(size) + " exceeds cap " +
              std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::uint64_t size() const { return size_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t size_;
  std::uint64_t cap_;
};

}  // namespace tenscanon
